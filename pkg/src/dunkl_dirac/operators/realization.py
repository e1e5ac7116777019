"""Realizations of the spherical Dirac-Dunkl operators.

A realization fixes a parameter set and a pair (D_A, X_A) of odd operators;
everything else (sCasimirs, Gamma operators, test spaces, the signs of the
osp(1|2) presentation) follows from that pair. Two realizations exist:

- ``CliffordRealization``: D_A = sum e_i T_i, x_A = sum e_i x_i on P (x) Cl_n
- ``ScalarRealization``: D_A = sum T_i R_i, X_A = sum x_i R_i on P

Every operator a realization hands out is a ``Named`` node whose label is
unique within the realization, so images of basis terms are computed once
per realization and reused across identities.
"""

from abc import ABC, abstractmethod
from collections.abc import Callable, Iterable
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
from typing import ClassVar

from dunkl_dirac.algebra.parameters import ParameterSet, subset_text
from dunkl_dirac.algebra.polynomial import SpinorPolynomial, basis_of_graded_component, scalar_basis_of_graded_component
from dunkl_dirac.constants import CLIFFORD_DEPTHS, FALLBACK_DEPTH, SCALAR_DEPTHS

from .dunkl import dirac_D, euler, laplace, norm2, pair_operator, position_X, reflection_product, subset_members
from .expr import EvaluationCache, Named, OperatorExpr, Reflect, anticommutator, commutator, scalar, scaled, sum_all
from .oracle import EqualityResult, operators_equal_on_degree
from .scalar import scalar_D, scalar_X

Relation = tuple[str, OperatorExpr, OperatorExpr]


class RealizationKind(StrEnum):
    CLIFFORD = "clifford"
    SCALAR = "scalar"


class Realization(ABC):
    """Operators of one realization at one parameter set."""

    kind: ClassVar[RealizationKind]
    osp_sign: ClassVar[int]
    depths: ClassVar[dict[int, int]]

    def __init__(self, params: ParameterSet):
        self.params = params
        self.n = params.n
        self.cache = EvaluationCache()
        self._named: dict[str, Named] = {}

    def __reduce__(self):
        # Worker processes rebuild the realization with a fresh cache.
        return get_realization, (str(self.kind), self.params)

    @abstractmethod
    def _dirac(self, members: list[int]) -> OperatorExpr: ...

    @abstractmethod
    def _position(self, members: list[int]) -> OperatorExpr: ...

    @abstractmethod
    def _scasimir(self, members: list[int]) -> OperatorExpr: ...

    @abstractmethod
    def basis(self, k: int) -> list[SpinorPolynomial]:
        """Basis of the degree-k test space."""

    def named(self, label: str, build: Callable[[], OperatorExpr]) -> Named:
        """Memoized ``Named`` node; ``build`` runs only the first time a label is seen."""
        op = self._named.get(label)
        if op is None:
            op = Named(label, build())
            self._named[label] = op
        return op

    def _subset(self, indices: Iterable[int]) -> tuple[list[int], str]:
        members = subset_members(self.params, indices)
        return members, subset_text(members)

    def dirac(self, indices: Iterable[int]) -> Named:
        members, text = self._subset(indices)
        return self.named(f"D{text}", lambda: self._dirac(members))

    def position(self, indices: Iterable[int]) -> Named:
        members, text = self._subset(indices)
        return self.named(f"X{text}", lambda: self._position(members))

    def scasimir(self, indices: Iterable[int]) -> Named:
        members, text = self._subset(indices)
        return self.named(f"S{text}", lambda: self._scasimir(members))

    def reflections(self, indices: Iterable[int]) -> Named:
        members, text = self._subset(indices)
        return self.named(f"R{text}", lambda: reflection_product(self.params, members))

    def gamma(self, indices: Iterable[int]) -> Named:
        """Gamma_A = S_A times the product of r_i over A."""
        members, text = self._subset(indices)
        return self.named(f"Gamma{text}", lambda: self.scasimir(members) @ self.reflections(members))

    def euler(self, indices: Iterable[int]) -> Named:
        members, text = self._subset(indices)
        return self.named(f"E{text}", lambda: euler(self.params, members))

    def laplace(self, indices: Iterable[int]) -> Named:
        members, text = self._subset(indices)
        return self.named(f"Lap{text}", lambda: laplace(self.params, members))

    def norm2(self, indices: Iterable[int]) -> Named:
        members, text = self._subset(indices)
        return self.named(f"N{text}", lambda: norm2(self.params, members))

    def shifted_euler(self, indices: Iterable[int]) -> Named:
        """E_A + gamma_A, the even generator of osp(1|2)."""
        members, text = self._subset(indices)
        return self.named(f"H{text}", lambda: self.euler(members) + scalar(self.params.gamma(members)))

    def full(self) -> list[int]:
        return list(range(1, self.n + 1))

    def default_depth(self) -> int:
        return self.depths.get(self.n, FALLBACK_DEPTH)

    def equal_on_degree(self, op1: OperatorExpr, op2: OperatorExpr, k_max: int) -> EqualityResult:
        return operators_equal_on_degree(op1, op2, self.n, k_max, basis=self.basis, cache=self.cache)

    @abstractmethod
    def symmetry_partners(self, indices: Iterable[int]) -> tuple[OperatorExpr, OperatorExpr]:
        """The odd pair that Gamma_A must commute with."""

    def __repr__(self) -> str:
        return f"{type(self).__name__}(mu={self.params})"


class CliffordRealization(Realization):
    kind = RealizationKind.CLIFFORD
    osp_sign = -1
    depths = CLIFFORD_DEPTHS

    def _dirac(self, members: list[int]) -> OperatorExpr:
        return dirac_D(self.params, members)

    def _position(self, members: list[int]) -> OperatorExpr:
        return position_X(self.params, members)

    def _scasimir(self, members: list[int]) -> OperatorExpr:
        bracket = commutator(self.position(members), self.dirac(members))
        return scaled(Fraction(1, 2), bracket - scalar(1))

    def gamma_explicit(self, indices: Iterable[int]) -> Named:
        """Gamma_A = (sum of M_ij over i<j + (|A|-1)/2 + sum of mu_k r_k) times the product of r_i."""
        members, text = self._subset(indices)

        def build() -> OperatorExpr:
            pairs = [pair_operator(self.params, i, j) for i in members for j in members if i < j]
            reflections = [scaled(self.params.mu_of(k), Reflect(k)) for k in members]
            constant = Fraction(len(members) - 1, 2)
            return sum_all([*pairs, scalar(constant), *reflections]) @ self.reflections(members)

        return self.named(f"GammaExplicit{text}", build)

    def basis(self, k: int) -> list[SpinorPolynomial]:
        return basis_of_graded_component(self.n, k)

    def symmetry_partners(self, indices: Iterable[int]) -> tuple[OperatorExpr, OperatorExpr]:
        full = self.full()
        return self.dirac(full), self.position(full)


class ScalarRealization(Realization):
    kind = RealizationKind.SCALAR
    osp_sign = 1
    depths = SCALAR_DEPTHS

    def _dirac(self, members: list[int]) -> OperatorExpr:
        return scalar_D(self.params, members)

    def _position(self, members: list[int]) -> OperatorExpr:
        return scalar_X(self.params, members)

    def _scasimir(self, members: list[int]) -> OperatorExpr:
        bracket = commutator(self.dirac(members), self.position(members))
        return scaled(Fraction(1, 2), bracket - scalar(1))

    def basis(self, k: int) -> list[SpinorPolynomial]:
        return scalar_basis_of_graded_component(self.n, k)

    def symmetry_partners(self, indices: Iterable[int]) -> tuple[OperatorExpr, OperatorExpr]:
        # Gamma_A is only guaranteed to commute with the pair built on A itself
        members = subset_members(self.params, indices)
        return self.dirac(members), self.position(members)


REALIZATIONS: dict[str, type[Realization]] = {
    RealizationKind.CLIFFORD: CliffordRealization,
    RealizationKind.SCALAR: ScalarRealization,
}


@lru_cache(maxsize=64)
def get_realization(kind: str, params: ParameterSet) -> Realization:
    """Shared realization per (kind, parameters) within a process."""
    try:
        cls = REALIZATIONS[RealizationKind(kind)]
    except ValueError as e:
        raise ValueError(f"Unknown realization: {kind!r}") from e
    return cls(params)


def osp_relations(realization: Realization, indices: Iterable[int]) -> list[Relation]:
    """The osp(1|2) brackets of (D_A, X_A) as (name, lhs, rhs) triples.

    The three odd-odd anticommutators carry the realization's sign: -2 for
    the Clifford pair (x^2 = -|x|^2), +2 for the scalar pair.
    """
    members = subset_members(realization.params, indices)
    d = realization.dirac(members)
    x = realization.position(members)
    h = realization.shifted_euler(members)
    lap = realization.laplace(members)
    r2 = realization.norm2(members)
    s = realization.osp_sign
    return [
        ("{X,X}", anticommutator(x, x), scaled(2 * s, r2)),
        ("{D,D}", anticommutator(d, d), scaled(2 * s, lap)),
        ("{X,D}", anticommutator(x, d), scaled(2 * s, h)),
        ("[D,H]", commutator(d, h), d),
        ("[D,|x|^2]", commutator(d, r2), scaled(2, x)),
        ("[H,X]", commutator(h, x), x),
        ("[Lap,X]", commutator(lap, x), scaled(2, d)),
        ("[Lap,H]", commutator(lap, h), scaled(2, lap)),
        ("[Lap,|x|^2]", commutator(lap, r2), scaled(4, h)),
        ("[H,|x|^2]", commutator(h, r2), scaled(2, r2)),
    ]


def square_relations(realization: Realization, indices: Iterable[int]) -> list[Relation]:
    """D_A^2 and X_A^2 against the signed Laplacian and squared norm."""
    members = subset_members(realization.params, indices)
    d = realization.dirac(members)
    x = realization.position(members)
    s = realization.osp_sign
    return [
        ("D^2", d @ d, scaled(s, realization.laplace(members))),
        ("X^2", x @ x, scaled(s, realization.norm2(members))),
    ]
