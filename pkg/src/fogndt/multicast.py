"""Bit-level run of the coded-multicast fronthaul protocol at mu = 1/M.

Every file is cut into M contiguous parts and EN j caches part j of every
file. For each demanded file the cloud multicasts the XOR of each pair of
adjacent parts; an EN walks that chain outwards from its own part and
recovers the whole file.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import ConfigError, NetworkConfig, Scheme, scheme_ndt


class PaddingError(ValueError):
    """File length is not a multiple of the number of parts."""


class DecodeError(RuntimeError):
    def __init__(self, file_index: int, chain_index: int):
        self.file_index = file_index
        self.chain_index = chain_index
        super().__init__(f"missing fronthaul message F[{file_index},{chain_index}] ^ F[{file_index},{chain_index + 1}]")


class ProtocolViolation(RuntimeError):
    """An EN reconstructed a demanded file incorrectly."""


@dataclass
class Library:
    files: list[np.ndarray]  # uint8 arrays of 0/1, all of length L
    original_length: int | None = None  # before zero padding, if any

    def __post_init__(self):
        lengths = {len(f) for f in self.files}
        if len(lengths) > 1:
            raise ValueError(f"files have unequal lengths {sorted(lengths)}")

    @property
    def N(self) -> int:
        return len(self.files)

    @property
    def L(self) -> int:
        return len(self.files[0]) if self.files else 0

    @classmethod
    def from_bits(cls, *bitstrings: str) -> "Library":
        return cls([np.frombuffer(s.encode(), dtype=np.uint8) - ord("0") for s in bitstrings])

    @classmethod
    def random(cls, N: int, L: int, seed: int, pad_to: int = 1) -> "Library":
        rng = np.random.default_rng(seed)
        files = [rng.integers(0, 2, size=L, dtype=np.uint8) for _ in range(N)]
        padded = -(-L // pad_to) * pad_to
        if padded == L:
            return cls(files)
        pad = np.zeros(padded - L, dtype=np.uint8)
        return cls([np.concatenate([f, pad]) for f in files], original_length=L)


@dataclass
class CacheContents:
    en_index: int  # 1-based
    stored: dict[int, np.ndarray]  # file index (1-based) -> cached part

    @property
    def bits(self) -> int:
        return sum(len(p) for p in self.stored.values())


@dataclass(frozen=True)
class FronthaulMessage:
    file_index: int
    chain_index: int  # payload = part j XOR part j+1
    payload: np.ndarray


@dataclass
class DeliveryReport:
    demand: list[int]
    fronthaul_bits: int
    implied_delta_f: float
    per_en_reconstruction: list[bool]
    edge_delta_e: float
    messages: list[FronthaulMessage] = field(default_factory=list, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "demand": list(self.demand),
            "fronthaul_bits": self.fronthaul_bits,
            "implied_delta_f": self.implied_delta_f,
            "per_en_reconstruction": list(self.per_en_reconstruction),
            "edge_delta_e": self.edge_delta_e,
        }


def split_and_cache(library: Library, M: int):
    """Return ``(parts, caches)``: parts[(i, j)] is subfile j of file i, 1-based."""
    if M < 1:
        raise ConfigError(f"M must be >= 1, got {M}")
    L = library.L
    if L % M:
        raise PaddingError(f"file length {L} is not a multiple of M={M}; pad the library first")
    size = L // M
    parts = {}
    for i, f in enumerate(library.files, start=1):
        for j in range(1, M + 1):
            parts[i, j] = f[(j - 1) * size : j * size]
    caches = [
        CacheContents(j, {i: parts[i, j] for i in range(1, library.N + 1)}) for j in range(1, M + 1)
    ]
    return parts, caches


def encode_fronthaul(demand, parts) -> list[FronthaulMessage]:
    files = sorted(set(demand))
    M = max(j for _, j in parts)
    for i in files:
        if (i, 1) not in parts:
            raise ValueError(f"demanded file {i} is not in the library")
    return [
        FronthaulMessage(i, j, np.bitwise_xor(parts[i, j], parts[i, j + 1]))
        for i in files
        for j in range(1, M)
    ]


def decode_at_en(en: CacheContents, messages, demand, M: int) -> dict[tuple[int, int], np.ndarray]:
    """Recover every part of every demanded file from the cached part plus the XOR chain."""
    chain = {(msg.file_index, msg.chain_index): msg.payload for msg in messages}
    m = en.en_index
    recovered = {}
    for i in sorted(set(demand)):
        recovered[i, m] = en.stored[i]
        for j in range(m, M):  # rightwards: part j+1 = part j ^ (part j ^ part j+1)
            if (i, j) not in chain:
                raise DecodeError(i, j)
            recovered[i, j + 1] = np.bitwise_xor(recovered[i, j], chain[i, j])
        for j in range(m - 1, 0, -1):  # leftwards: part j = part j+1 ^ (part j ^ part j+1)
            if (i, j) not in chain:
                raise DecodeError(i, j)
            recovered[i, j] = np.bitwise_xor(recovered[i, j + 1], chain[i, j])
    return recovered


def draw_demand(N: int, K: int, rng: np.random.Generator) -> list[int]:
    return sorted(int(i) + 1 for i in rng.choice(N, size=K, replace=False))


def run_delivery(cfg: NetworkConfig, L: int, seed: int, demand=None) -> DeliveryReport:
    M, K, N = cfg.M, cfg.K, cfg.N
    if abs(cfg.mu - 1.0 / M) > 1e-12:
        raise ConfigError(f"coded multicasting runs at mu=1/M={1.0 / M:.12g}, got {cfg.mu}")
    if cfg.r <= 0:
        raise ConfigError("fronthaul rate r must be > 0 to deliver anything")
    if L < 1:
        raise ConfigError(f"L must be >= 1, got {L}")

    rng = np.random.default_rng(seed)
    library = Library.random(N, L, seed=int(rng.integers(2**63)), pad_to=M)
    if demand is None:
        demand = draw_demand(N, K, rng)
    demand = [int(d) for d in demand]
    if len(demand) != K:
        raise ConfigError(f"demand must list K={K} files, got {len(demand)}")
    if any(not 1 <= d <= N for d in demand):
        raise ConfigError(f"demand indices must lie in [1, {N}], got {demand}")

    parts, caches = split_and_cache(library, M)
    budget = N * library.L // M
    if any(c.bits > budget for c in caches):
        raise ProtocolViolation("cache budget exceeded")

    messages = encode_fronthaul(demand, parts)
    ok = []
    for en in caches:
        rec = decode_at_en(en, messages, demand, M)
        ok.append(
            all(
                np.array_equal(np.concatenate([rec[i, j] for j in range(1, M + 1)]), library.files[i - 1])
                for i in set(demand)
            )
        )

    bits = sum(len(msg.payload) for msg in messages)
    Lp = library.L
    return DeliveryReport(
        demand=demand,
        fronthaul_bits=bits,
        implied_delta_f=bits / (Lp * cfg.r),
        per_en_reconstruction=ok,
        edge_delta_e=scheme_ndt(Scheme.CC, cfg).delta_e,
        messages=messages,
    )


def check_report(report: DeliveryReport) -> DeliveryReport:
    if not all(report.per_en_reconstruction):
        bad = [m + 1 for m, ok in enumerate(report.per_en_reconstruction) if not ok]
        raise ProtocolViolation(f"ENs {bad} failed to reconstruct the demanded files")
    return report

