"""Run parameters for the randomized checks and experiment scripts."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class CatalogueConfig:
    max_order: int = 4
    max_edges: int = 5
    max_weight: int = 3
    loops: bool = True


@dataclass(frozen=True)
class RandomGraphConfig:
    seed: int = 20261015
    count: int = 200
    orders: tuple[int, ...] = (5, 6)
    extra_edges: tuple[int, int] = (0, 4)
    max_weight: int = 3
    loop_prob: float = 0.15


@dataclass(frozen=True)
class CheckConfig:
    """Sizes used by the acceptance run; every field is an upper bound."""

    catalogue: CatalogueConfig = field(default_factory=CatalogueConfig)
    random_graphs: RandomGraphConfig = field(default_factory=RandomGraphConfig)
    classify_max_size: int = 8
    oracle_max_weight: int = 10
    oracle_ks: tuple[int, ...] = (1, 2, 3)
    chromatic_ks: tuple[int, ...] = (0, 1, 2, 3, 4)
    kdeletion_cases: int = 50
    kdeletion_max_order: int = 7
    incexc_cases: int = 50
    reciprocity_degree: int = 8
    neat_degree: int = 7
    omega_max_size: int = 7
    composed_pairs: int = 20

    def to_json(self) -> dict:
        return asdict(self)
