"""Exact arithmetic with degree-zero vector bundles on an elliptic curve.

Every indecomposable degree-zero bundle is isomorphic to L^e ⊗ F_r, where L
is a degree-zero line bundle and F_r is the rank-r Atiyah bundle (the unique
indecomposable of rank r and degree zero with a nonzero section; F_1 = O).
Tensor products of the F_r obey the same rule as Clebsch-Gordan products of
irreducible sl2 representations,

    F_r ⊗ F_s = F_{r-s+1} ⊕ F_{r-s+3} ⊕ ... ⊕ F_{r+s-1}    (s ≤ r),

and line exponents add.  Every operation here is exact: multiplicities are
Python integers and grow without overflow (they reach ~r^m in m-th tensor
powers).

A :class:`TorsionContext` fixes the multiplicative order of L once per
computation; exponents are canonicalized at construction so that equality of
sums is plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class ContextMismatchError(ValueError):
    """Raised when two values built over different torsion contexts are combined."""


@dataclass(frozen=True)
class TorsionContext:
    """Order of the twisting line bundle L in Pic^0(X).

    ``order = 0`` means L is non-torsion (exponents are unrestricted),
    ``order = 1`` means L ≅ O, and ``order = n ≥ 2`` means n is minimal with
    L^n ≅ O (exponents are kept as residues in [0, n)).
    """

    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("torsion order must be >= 0")

    def reduce_exponent(self, exponent: int) -> int:
        """Canonical representative of a line exponent in this context."""
        if self.order == 0:
            return exponent
        return exponent % self.order

    def bundle(self, exponent: int = 0, index: int = 1) -> IndecomposableBundle:
        """The class of L^exponent ⊗ F_index, with the exponent canonicalized."""
        return IndecomposableBundle(self.reduce_exponent(exponent), index)

    def line(self, exponent: int) -> IndecomposableBundle:
        return self.bundle(exponent, 1)

    def atiyah(self, index: int) -> IndecomposableBundle:
        return self.bundle(0, index)

    def __str__(self) -> str:
        if self.order == 0:
            return "non-torsion L"
        if self.order == 1:
            return "L = O"
        return f"L of order {self.order}"


@dataclass(frozen=True)
class IndecomposableBundle:
    """The isomorphism class L^exponent ⊗ F_index.

    The rank equals ``index`` and the degree is zero.  ``index == 1`` is a
    pure line-bundle class; ``exponent == 0 and index == 1`` is O itself.
    """

    exponent: int
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("F index must be >= 1")

    def sort_key(self) -> tuple[int, int]:
        return (self.index, self.exponent)

    def __str__(self) -> str:
        if self.index == 1:
            if self.exponent == 0:
                return "O"
            if self.exponent == 1:
                return "L"
            return f"L^{self.exponent}"
        fr = f"F_{self.index}"
        if self.exponent == 0:
            return fr
        if self.exponent == 1:
            return f"L*{fr}"
        return f"L^{self.exponent}*{fr}"


def sym_power_f2(k: int) -> IndecomposableBundle:
    """k-th symmetric power of F_2, which is F_{k+1}."""
    if k < 0:
        raise ValueError("symmetric power must be >= 0")
    return IndecomposableBundle(0, k + 1)


def component_indices(r: int, s: int) -> range:
    """Indices of the components of F_r ⊗ F_s: |r-s|+1, |r-s|+3, ..., r+s-1."""
    lo, hi = (r, s) if r <= s else (s, r)
    return range(hi - lo + 1, hi + lo, 2)


def tensor_indec(
    context: TorsionContext, a: IndecomposableBundle, b: IndecomposableBundle
) -> BundleSum:
    """Decompose (L^e_a ⊗ F_r) ⊗ (L^e_b ⊗ F_s) into indecomposables.

    The result is ⊕ L^{e_a+e_b} ⊗ F_j over min(r, s) component indices j,
    each with multiplicity one, of total rank r·s.
    """
    e = context.reduce_exponent(a.exponent + b.exponent)
    terms = {
        IndecomposableBundle(e, j): 1 for j in component_indices(a.index, b.index)
    }
    return BundleSum(context, terms)


def dual(context: TorsionContext, a: IndecomposableBundle) -> IndecomposableBundle:
    """Dual class: the F_r are self-dual, so only the line exponent flips."""
    return context.bundle(-a.exponent, a.index)


@dataclass(frozen=True)
class BundleSum:
    """A finite direct sum of indecomposables with positive multiplicities.

    The empty sum is the zero object; it only shows up as an arithmetic
    intermediate (e.g. scaling by 0), never as an isomorphism class of an
    actual bundle.  Treat instances as immutable.
    """

    context: TorsionContext
    terms: dict[IndecomposableBundle, int] = field(default_factory=dict)

    @classmethod
    def of(
        cls,
        context: TorsionContext,
        terms: Mapping[IndecomposableBundle, int] | Iterable[tuple[IndecomposableBundle, int]],
    ) -> BundleSum:
        """Build a sum, canonicalizing exponents and dropping zero multiplicities."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[IndecomposableBundle, int] = {}
        for bundle, mult in items:
            if mult < 0:
                raise ValueError("multiplicities must be >= 0")
            if mult == 0:
                continue
            key = context.bundle(bundle.exponent, bundle.index)
            acc[key] = acc.get(key, 0) + mult
        return cls(context, acc)

    @classmethod
    def single(
        cls, context: TorsionContext, bundle: IndecomposableBundle, mult: int = 1
    ) -> BundleSum:
        return cls.of(context, [(bundle, mult)])

    @classmethod
    def zero(cls, context: TorsionContext) -> BundleSum:
        return cls(context, {})

    @classmethod
    def unit(cls, context: TorsionContext) -> BundleSum:
        """The class of O, the tensor unit."""
        return cls(context, {context.bundle(): 1})

    # -- queries ---------------------------------------------------------

    def multiplicity(self, bundle: IndecomposableBundle) -> int:
        return self.terms.get(bundle, 0)

    def support(self) -> tuple[IndecomposableBundle, ...]:
        return tuple(sorted(self.terms, key=IndecomposableBundle.sort_key))

    def rank(self) -> int:
        return sum(m * b.index for b, m in self.terms.items())

    def det_exponent(self) -> int:
        """Exponent of det(V) as a power of L; det(L^e ⊗ F_r) = L^{e·r}."""
        return self.context.reduce_exponent(
            sum(m * b.exponent * b.index for b, m in self.terms.items())
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ------------------------------------------------------

    def _check_context(self, other: BundleSum) -> None:
        if self.context != other.context:
            raise ContextMismatchError(
                f"cannot combine bundles over {self.context} and {other.context}"
            )

    def __add__(self, other: BundleSum) -> BundleSum:
        self._check_context(other)
        acc = dict(self.terms)
        for b, m in other.terms.items():
            acc[b] = acc.get(b, 0) + m
        return BundleSum(self.context, acc)

    def scale(self, k: int) -> BundleSum:
        if k < 0:
            raise ValueError("multiplicities must be >= 0")
        if k == 0:
            return BundleSum.zero(self.context)
        return BundleSum(self.context, {b: k * m for b, m in self.terms.items()})

    def tensor(self, other: BundleSum) -> BundleSum:
        self._check_context(other)
        acc: dict[IndecomposableBundle, int] = {}
        reduce = self.context.reduce_exponent
        for a, ma in self.terms.items():
            for b, mb in other.terms.items():
                m = ma * mb
                e = reduce(a.exponent + b.exponent)
                for j in component_indices(a.index, b.index):
                    key = IndecomposableBundle(e, j)
                    acc[key] = acc.get(key, 0) + m
        return BundleSum(self.context, acc)

    def dual(self) -> BundleSum:
        return BundleSum.of(
            self.context, [(dual(self.context, b), m) for b, m in self.terms.items()]
        )

    def tensor_power(self, power: int) -> BundleSum:
        """|power|-fold tensor power, dualizing first for negative powers.

        The zeroth power is O by the empty-product convention.
        """
        if not self.terms:
            raise ValueError("cannot take tensor powers of the zero sum")
        if power == 0:
            return BundleSum.unit(self.context)
        base = self.dual() if power < 0 else self
        result = base
        for _ in range(abs(power) - 1):
            result = result.tensor(base)
        return result

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, BundleSum):
            return self.tensor(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int) -> BundleSum:
        return self.tensor_power(power)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for b in self.support():
            m = self.terms[b]
            parts.append(str(b) if m == 1 else f"{m} {b}")
        return " + ".join(parts)


def tensor(x: BundleSum, y: BundleSum) -> BundleSum:
    return x.tensor(y)


def tensor_power(x: BundleSum, power: int) -> BundleSum:
    return x.tensor_power(power)


def rank(x: BundleSum) -> int:
    return x.rank()


def det_exponent(x: BundleSum) -> int:
    return x.det_exponent()


@dataclass(frozen=True)
class KRingElement:
    """An element of the Grothendieck ring K(X): a Z-linear combination of
    indecomposable classes, with multiplication extended bilinearly from the
    tensor rule.  Coefficients may be negative, unlike :class:`BundleSum`.
    """

    context: TorsionContext
    coeffs: dict[IndecomposableBundle, int] = field(default_factory=dict)

    @classmethod
    def zero(cls, context: TorsionContext) -> KRingElement:
        return cls(context, {})

    @classmethod
    def one(cls, context: TorsionContext) -> KRingElement:
        return cls(context, {context.bundle(): 1})

    @classmethod
    def basis(cls, context: TorsionContext, bundle: IndecomposableBundle) -> KRingElement:
        return cls(context, {context.bundle(bundle.exponent, bundle.index): 1})

    @classmethod
    def from_sum(cls, x: BundleSum) -> KRingElement:
        return cls(x.context, dict(x.terms))

    def _check_context(self, other: KRingElement) -> None:
        if self.context != other.context:
            raise ContextMismatchError(
                f"cannot combine ring elements over {self.context} and {other.context}"
            )

    def __add__(self, other):
        if isinstance(other, int):
            other = other * KRingElement.one(self.context)
        if not isinstance(other, KRingElement):
            return NotImplemented
        self._check_context(other)
        acc = dict(self.coeffs)
        for b, c in other.coeffs.items():
            v = acc.get(b, 0) + c
            if v:
                acc[b] = v
            else:
                acc.pop(b, None)
        return KRingElement(self.context, acc)

    __radd__ = __add__

    def __neg__(self) -> KRingElement:
        return KRingElement(self.context, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = other * KRingElement.one(self.context)
        if not isinstance(other, KRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return KRingElement.zero(self.context)
            return KRingElement(self.context, {b: other * c for b, c in self.coeffs.items()})
        if not isinstance(other, KRingElement):
            return NotImplemented
        self._check_context(other)
        acc: dict[IndecomposableBundle, int] = {}
        reduce = self.context.reduce_exponent
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                c = ca * cb
                e = reduce(a.exponent + b.exponent)
                for j in component_indices(a.index, b.index):
                    key = IndecomposableBundle(e, j)
                    v = acc.get(key, 0) + c
                    if v:
                        acc[key] = v
                    else:
                        acc.pop(key, None)
        return KRingElement(self.context, acc)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> KRingElement:
        if power < 0:
            raise ValueError("ring powers must be >= 0")
        result = KRingElement.one(self.context)
        for _ in range(power):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for b in sorted(self.coeffs, key=IndecomposableBundle.sort_key):
            c = self.coeffs[b]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"[{b}]" if mag == 1 else f"{mag}[{b}]"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text
