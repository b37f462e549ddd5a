"""Positive affine semigroups in N^m.

The central object is :class:`AffineSemigroup`: an ordered list of distinct
nonzero generators with lazily computed cone and lattice data.  All geometry
is done with exact rational arithmetic; membership is decided by a memoized
descent that terminates because generator subtraction strictly decreases the
coordinate sum.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import (
    DimensionMismatchError,
    DuplicateGeneratorError,
    EmptyInputError,
    NegativeEntryError,
    NotSimplicialError,
    OutsideSpanError,
    ZeroGeneratorError,
)
from .intlinalg import (
    FiniteAbelianGroup,
    IntMatrix,
    Vec,
    invert_rational,
    lattice_basis,
    nonnegative_combination_exists,
    quotient_group,
    solve_rational_canonical,
)


def vkey(v: Vec) -> tuple[int, Vec]:
    """Canonical vector order used project-wide: coordinate sum, then lex."""
    return (sum(v), v)


def primitive(v: Vec) -> Vec:
    g = 0
    for e in v:
        g = gcd(g, e)
    return tuple(e // g for e in v)


@dataclass(frozen=True)
class Frame:
    """The free subsemigroup: one minimal generator per extreme ray.

    ``elements`` are linearly independent over Q and ordered by descending
    tuple order of their primitive ray directions (x_1 is the lex-largest
    ray).  ``coordinates`` solves ``sum(lam[k] * e_k) == x`` exactly.
    """

    elements: tuple[Vec, ...]
    _solver: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_elements(elements: tuple[Vec, ...]) -> "Frame":
        d = len(elements)
        m = len(elements[0])
        # left inverse of the m x d column matrix, via the Gram matrix
        gram = [[sum(elements[a][i] * elements[b][i] for i in range(m))
                 for b in range(d)] for a in range(d)]
        ginv = invert_rational(gram)
        solver = tuple(
            tuple(sum(ginv[k][a] * elements[a][i] for a in range(d))
                  for i in range(m))
            for k in range(d))
        return Frame(elements, solver)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @property
    def ambient_dim(self) -> int:
        return len(self.elements[0])

    def coordinates(self, x: Vec) -> tuple[Fraction, ...]:
        """The unique rational ``lam`` with ``sum(lam[k]*e_k) == x``."""
        if len(x) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector has length {len(x)}, ambient dimension is {self.ambient_dim}")
        lam = tuple(sum(row[i] * x[i] for i in range(len(x)))
                    for row in self._solver)
        for i in range(len(x)):
            if sum(lam[k] * self.elements[k][i] for k in range(self.dim)) != x[i]:
                raise OutsideSpanError(
                    f"{tuple(x)} is outside the rational span of the frame")
        return lam


@dataclass(frozen=True)
class DegreeFunctional:
    """A rational functional valuing 1 on every generator.

    On the group generated by B it takes integer values automatically,
    since every group element is an integer combination of generators.
    """

    coefficients: tuple[Fraction, ...]

    def value(self, x: Vec) -> Fraction:
        return sum(c * e for c, e in zip(self.coefficients, x, strict=True))

    def degree(self, x: Vec) -> int:
        v = self.value(x)
        if v.denominator != 1:
            raise ValueError(f"degree of {tuple(x)} is not an integer: {v}")
        return int(v)


class AffineSemigroup:
    """A positive affine semigroup given by distinct nonzero generators in N^m.

    Immutable after construction except for internal memo caches, whose
    fills are idempotent; concurrent readers may share an instance.
    """

    def __init__(self, generators: tuple[Vec, ...]):
        self.generators = generators
        self.ambient_dim = len(generators[0])
        self._member_cache: dict[Vec, bool] = {(0,) * self.ambient_dim: True}

    # -- construction --------------------------------------------------------

    @staticmethod
    def from_generators(gens) -> "AffineSemigroup":
        # operator.index rejects floats instead of silently truncating
        rows = [tuple(operator.index(e) for e in g) for g in gens]
        if not rows:
            raise EmptyInputError("a semigroup needs at least one generator")
        m = len(rows[0])
        for g in rows:
            if len(g) != m:
                raise DimensionMismatchError(
                    f"generator {g} has length {len(g)}, expected {m}")
            if any(e < 0 for e in g):
                raise NegativeEntryError(f"generator {g} has a negative entry")
            if all(e == 0 for e in g):
                raise ZeroGeneratorError("the zero vector is not a generator")
        seen = set()
        for g in rows:
            if g in seen:
                raise DuplicateGeneratorError(f"generator {g} appears twice")
            seen.add(g)
        return AffineSemigroup(tuple(rows))

    def __repr__(self) -> str:
        return f"AffineSemigroup({list(self.generators)!r})"

    # -- lattice data ---------------------------------------------------------

    @cached_property
    def group_basis(self) -> IntMatrix:
        """Canonical basis of the group generated by the generators."""
        return lattice_basis(list(self.generators))

    @property
    def rank(self) -> int:
        return len(self.group_basis)

    # -- membership -----------------------------------------------------------

    def member(self, x) -> bool:
        """Whether ``x`` is a finite N-combination of the generators.

        Memoized descent on ``x - b_i``; each step strictly decreases the
        coordinate sum, so the recursion (here an explicit stack)
        terminates.
        """
        x = tuple(x)
        if len(x) != self.ambient_dim:
            raise DimensionMismatchError(
                f"vector has length {len(x)}, ambient dimension is {self.ambient_dim}")
        if any(e < 0 for e in x):
            return False
        cache = self._member_cache
        stack = [x]
        while stack:
            v = stack[-1]
            if v in cache:
                stack.pop()
                continue
            hit = False
            pending = []
            for b in self.generators:
                w = tuple(a - c for a, c in zip(v, b))
                if any(e < 0 for e in w):
                    continue
                known = cache.get(w)
                if known is True:
                    hit = True
                    break
                if known is None:
                    pending.append(w)
            if hit:
                cache[v] = True
                stack.pop()
            elif pending:
                stack.extend(pending)
            else:
                cache[v] = False
                stack.pop()
        return cache[x]

    # -- cone geometry ----------------------------------------------------------

    @cached_property
    def _ray_groups(self) -> tuple[tuple[Vec, tuple[int, ...]], ...]:
        """Generators grouped by primitive direction.

        Groups are ordered by descending tuple order of the directions, the
        usual lex convention for variables (x_1 is the lex-largest
        direction), so a standard basis comes out as e_1, ..., e_d.
        """
        groups: dict[Vec, list[int]] = {}
        for i, g in enumerate(self.generators):
            groups.setdefault(primitive(g), []).append(i)
        return tuple(sorted(((d, tuple(ix)) for d, ix in groups.items()),
                            reverse=True))

    @cached_property
    def _extreme_ray_indices(self) -> tuple[int, ...]:
        reps = []
        for direction, indices in self._ray_groups:
            rep = min(indices, key=lambda i: vkey(self.generators[i]))
            others = [self.generators[i]
                      for d2, ix in self._ray_groups if d2 != direction
                      for i in ix]
            if not nonnegative_combination_exists(others, self.generators[rep]):
                reps.append(rep)
        return tuple(reps)

    def extreme_rays(self) -> tuple[int, ...]:
        """One representative generator index per extreme ray, ordered by
        descending tuple order of the primitive ray directions."""
        return self._extreme_ray_indices

    def is_simplicial(self) -> bool:
        return len(self._extreme_ray_indices) == self.rank

    @cached_property
    def _frame(self) -> Frame | None:
        if not self.is_simplicial():
            return None
        elements = tuple(self.generators[i] for i in self._extreme_ray_indices)
        return Frame.from_elements(elements)

    def frame(self) -> Frame:
        f = self._frame
        if f is None:
            raise NotSimplicialError(
                f"cone has {len(self._extreme_ray_indices)} extreme rays "
                f"but rank {self.rank}")
        return f

    @cached_property
    def _quotient(self) -> FiniteAbelianGroup:
        return quotient_group(self.group_basis, list(self.frame().elements))

    def quotient(self) -> FiniteAbelianGroup:
        """The finite group of generator classes modulo the frame lattice."""
        return self._quotient

    # -- grading ---------------------------------------------------------------

    @cached_property
    def _degree_functional(self) -> DegreeFunctional | None:
        mat = [list(g) for g in self.generators]
        sol = solve_rational_canonical(mat, [1] * len(self.generators))
        if sol is None:
            return None
        return DegreeFunctional(sol)

    def degree_functional(self) -> DegreeFunctional | None:
        return self._degree_functional

    @property
    def is_homogeneous(self) -> bool:
        return self._degree_functional is not None

    # -- minimality --------------------------------------------------------------

    def minimalize_check(self) -> tuple[int, ...]:
        """Indices of generators contained in the semigroup of the others."""
        redundant = []
        for i, g in enumerate(self.generators):
            others = self.generators[:i] + self.generators[i + 1:]
            if not others:
                continue
            reduced = AffineSemigroup(others)
            if reduced.member(g):
                redundant.append(i)
        return tuple(redundant)

    # -- module generators over the frame ------------------------------------------

    @cached_property
    def _module_generators(self) -> tuple[Vec, ...]:
        frame = self.frame()
        group = self.quotient()
        frame_set = set(frame.elements)
        extras = [g for g in self.generators if g not in frame_set]
        orders = [group.element_order(g) for g in extras]
        # Box bound.  Write x with x - e_k not in B for all k as
        # x = sum_i n_i b_i.  If some n_j >= D_j, where D_j is the order of
        # the class of b_j modulo the frame lattice, then D_j*b_j lies in
        # that lattice; its frame coordinates are integers and nonnegative
        # (the cone is simplicial, so every element of B has nonnegative
        # frame coordinates), hence D_j*b_j is a nonzero element of the
        # frame subsemigroup and x - D_j*b_j is in B.  Subtracting frame
        # generators one at a time from x then stays in B at each step,
        # contradicting minimality of x.  Frame generators have order 1 and
        # never occur.  So enumerating exponents n_i < D_i covers every
        # minimal element, and the membership filter below is exact.
        zero = (0,) * self.ambient_dim
        candidates = {zero}
        for exponents in itertools.product(*(range(d) for d in orders)):
            v = zero
            for n, b in zip(exponents, extras):
                if n:
                    v = tuple(a + n * c for a, c in zip(v, b))
            candidates.add(v)
        result = []
        for x in sorted(candidates, key=vkey):
            minimal = True
            for e in frame.elements:
                w = tuple(a - c for a, c in zip(x, e))
                if all(c >= 0 for c in w) and self.member(w):
                    minimal = False
                    break
            if minimal:
                result.append(x)
        return tuple(result)

    def module_generators(self) -> tuple[Vec, ...]:
        """The elements of B from which no frame generator can be subtracted
        inside B, sorted by :func:`vkey`."""
        return self._module_generators


def validate(gens) -> AffineSemigroup:
    """Construct a semigroup from raw generator rows, or reject them."""
    return AffineSemigroup.from_generators(gens)
