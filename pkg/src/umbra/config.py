from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    trunc: int = 64  # default series truncation N
    max_order: int = 16  # cap on r for B_n^{(r)}
    max_degree: int = 256  # cap on parsed exponents / family indices
    seed: int = 0


DEFAULT = Config()
