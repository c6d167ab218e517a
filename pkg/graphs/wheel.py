"""h-wheels: an odd rim cycle, an h-clique of centers, spokes to k >= 3 radial rim vertices.

Vertices are numbered rim first (1..2m+1, named x1..) and centers after
(2m+2..2m+1+h, named y1..yh).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
import networkx as nx

from algebra.errors import GraphError, HWheelError
from algebra.ideal import MonomialIdeal, embed, product, sum_ideals, variables_ideal
from graphs.graph_ideals import di_ideal, rim_intersection_ideal
from graphs.simple_graph import SimpleGraph, cycle

log = logging.getLogger(__name__)

@dataclass(frozen=True)
class HWheelSpec:
    h: int
    rim_length: int
    radial: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "radial", tuple(sorted(set(self.radial))))
        if self.h < 1:
            raise GraphError(f"an h-wheel needs h >= 1 centers, got {self.h}")
        if self.rim_length < 5 or self.rim_length % 2 == 0:
            raise GraphError(f"the rim length must be odd and >= 5, got {self.rim_length}")
        if any(not 1 <= i <= self.rim_length for i in self.radial):
            raise GraphError(f"radial vertices {list(self.radial)} leave the rim 1..{self.rim_length}")

    @property
    def k(self) -> int:
        """Radial number."""
        return len(self.radial)

    @property
    def radial_lengths(self) -> tuple[int, ...]:
        """Rim path lengths between consecutive radial vertices, wrapping around."""
        if not self.radial:
            return ()
        r = self.radial
        return tuple((r[(j + 1) % len(r)] - r[j]) % self.rim_length or self.rim_length for j in range(len(r)))

    @property
    def n_vertices(self) -> int:
        return self.rim_length + self.h

    @property
    def rim(self) -> range:
        return range(1, self.rim_length + 1)

    @property
    def centers(self) -> range:
        return range(self.rim_length + 1, self.rim_length + self.h + 1)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(f"x{i}" for i in self.rim) + tuple(f"y{j}" for j in range(1, self.h + 1))

    def __str__(self) -> str:
        return f"wheel:{self.h},{self.rim_length},[{','.join(map(str, self.radial))}]"


def has_consecutive_radial(spec: HWheelSpec, run: int = 3) -> bool:
    """Does some rim stretch of ``run`` consecutive vertices consist of radial ones?"""
    radial = set(spec.radial)
    n = spec.rim_length
    return any(all((i + d - 1) % n + 1 in radial for d in range(run)) for i in spec.rim)


def _odd_cycles_through(G: nx.Graph, y: int, enough: int = 2) -> int:
    found = 0
    for c in nx.simple_cycles(G):
        if y in c and len(c) % 2 == 1:
            found += 1
            if found >= enough:
                break
    return found


def hwheel_violations(G: SimpleGraph, spec: HWheelSpec) -> list[tuple[int, str]]:
    """Conditions (1)-(4) of the h-wheel definition that G fails, as (number, detail).

    Condition (4) counts odd cycles through y in the subgraph induced by y and
    its whole neighborhood N_G(y), the other centers included.
    """
    out: list[tuple[int, str]] = []
    rim, centers = list(spec.rim), list(spec.centers)
    H = G.to_networkx()

    for a, b in combinations(centers, 2):
        if not H.has_edge(a, b):
            out.append((1, f"centers {G.labels[a - 1]} and {G.labels[b - 1]} are not adjacent"))
            break

    R = H.subgraph(rim)
    if not (nx.is_connected(R) and all(d == 2 for _, d in R.degree()) and len(rim) % 2 == 1):
        out.append((2, "the rim does not induce an odd cycle"))

    hoods = {y: frozenset(H.neighbors(y)) & set(rim) for y in centers}
    if len(set(hoods.values())) != 1:
        out.append((3, "the centers do not share one rim neighborhood"))
    elif len(next(iter(hoods.values()))) < 3:
        out.append((3, f"the radial number is {len(next(iter(hoods.values())))} < 3"))

    for y in centers:
        if _odd_cycles_through(H.subgraph({y} | set(H.neighbors(y))), y) < 2:
            out.append((4, f"{G.labels[y - 1]} lies on fewer than two odd cycles"))
            break
    return out


def build_h_wheel(spec: HWheelSpec) -> SimpleGraph:
    edges = [(i, i % spec.rim_length + 1) for i in spec.rim]
    edges += list(combinations(spec.centers, 2))
    edges += [(i, y) for y in spec.centers for i in spec.radial]
    G = SimpleGraph.from_edges(spec.n_vertices, edges, spec.labels, str(spec))
    violations = hwheel_violations(G, spec)
    if violations:
        raise HWheelError([c for c, _ in violations], [d for _, d in violations])
    return G


@dataclass(frozen=True)
class WheelDecomposition:
    rim_ideal: MonomialIdeal
    center_prime: MonomialIdeal
    rim_intersection: MonomialIdeal
    combined: MonomialIdeal
    holds: bool


def wheel_decomposition(spec: HWheelSpec) -> WheelDecomposition:
    """DI(G) against DI(rim) + J*H, J the center prime and H the rim intersection off the radial vertices."""
    G = build_h_wheel(spec)
    n, names = spec.n_vertices, spec.labels
    rim_di = embed(di_ideal(cycle(spec.rim_length)), n, names=names)
    J = variables_ideal((y - 1 for y in spec.centers), n, names)
    H = rim_intersection_ideal(spec.rim_length, spec.radial, n, names)
    combined = sum_ideals(rim_di, product(J, H))
    holds = combined == di_ideal(G)
    if not holds:
        log.warning("DI(%s) differs from DI(rim) + J*H", spec)
    return WheelDecomposition(rim_di, J, H, combined, holds)
