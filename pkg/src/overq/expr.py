"""Series recipes: small expression trees over the named q-series builders.

Identity cases and dissection-step replays store their two sides as data, not
code, so reports and the command line can list exactly what was evaluated.
A recipe node evaluates to a :class:`~overq.series.Series` over any ring at
any order via :func:`evaluate`.

Recipes support ``+``, ``-``, ``*`` (by recipe or integer), and ``**`` with an
integer exponent, so registry entries read close to their mathematical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .series import Ring, Series
from .eta import (
    EtaQuotient,
    expand_eta_quotient,
    jacobi_triangular,
    opt_gf,
    overpartition_gf,
    theta_component,
)

__all__ = [
    "Recipe",
    "EtaRecipe",
    "ThetaRecipe",
    "JacobiRecipe",
    "GfRecipe",
    "SumRecipe",
    "ProductRecipe",
    "ScaleRecipe",
    "PowRecipe",
    "ShiftRecipe",
    "SubstRecipe",
    "DissectRecipe",
    "eta_series",
    "theta_series",
    "jacobi_series",
    "qshift",
    "evaluate",
]


@dataclass(frozen=True)
class Recipe:
    def __add__(self, other: "Recipe") -> "Recipe":
        return SumRecipe((self, other))

    def __sub__(self, other: "Recipe") -> "Recipe":
        return SumRecipe((self, ScaleRecipe(-1, other)))

    def __mul__(self, other: Union["Recipe", int]) -> "Recipe":
        if isinstance(other, int):
            return ScaleRecipe(other, self)
        return ProductRecipe((self, other))

    def __rmul__(self, scalar: int) -> "Recipe":
        return ScaleRecipe(scalar, self)

    def __neg__(self) -> "Recipe":
        return ScaleRecipe(-1, self)

    def __pow__(self, exponent: int) -> "Recipe":
        return PowRecipe(self, exponent)

    def subst(self, step: int) -> "Recipe":
        """The recipe with q replaced by q^step."""
        return SubstRecipe(step, self)

    def dissect(self, modulus: int, residue: int) -> "Recipe":
        """The recipe's coefficients along exponents == residue (mod modulus)."""
        return DissectRecipe(modulus, residue, self)


@dataclass(frozen=True)
class EtaRecipe(Recipe):
    quotient: EtaQuotient

    def __str__(self) -> str:
        return str(self.quotient)


@dataclass(frozen=True)
class ThetaRecipe(Recipe):
    name: str

    def __str__(self) -> str:
        return self.name if self.name == "A" else f"{self.name}(q)"


@dataclass(frozen=True)
class JacobiRecipe(Recipe):
    def __str__(self) -> str:
        return "sum (-1)^k (2k+1) q^(k(k+1)/2)"


@dataclass(frozen=True)
class GfRecipe(Recipe):
    """One of the two counting generating functions, by family kind."""

    kind: str  # "overpartition" | "opt"
    parameter: int

    def __str__(self) -> str:
        name = "pbar" if self.kind == "overpartition" else "opt"
        return f"{name}_gf({self.parameter})"


@dataclass(frozen=True)
class SumRecipe(Recipe):
    terms: tuple[Recipe, ...]

    def __str__(self) -> str:
        return " + ".join(f"({t})" for t in self.terms)


@dataclass(frozen=True)
class ProductRecipe(Recipe):
    factors: tuple[Recipe, ...]

    def __str__(self) -> str:
        return " * ".join(f"({f})" for f in self.factors)


@dataclass(frozen=True)
class ScaleRecipe(Recipe):
    scalar: int
    inner: Recipe

    def __str__(self) -> str:
        return f"{self.scalar}*({self.inner})"


@dataclass(frozen=True)
class PowRecipe(Recipe):
    base: Recipe
    exponent: int

    def __str__(self) -> str:
        return f"({self.base})^{self.exponent}"


@dataclass(frozen=True)
class ShiftRecipe(Recipe):
    offset: int
    inner: Recipe

    def __str__(self) -> str:
        return f"q^{self.offset}*({self.inner})"


@dataclass(frozen=True)
class SubstRecipe(Recipe):
    step: int
    inner: Recipe

    def __str__(self) -> str:
        return f"({self.inner})[q->q^{self.step}]"


@dataclass(frozen=True)
class DissectRecipe(Recipe):
    modulus: int
    residue: int
    inner: Recipe

    def __str__(self) -> str:
        return f"({self.inner})[{self.modulus}n+{self.residue}]"


def eta_series(quotient: str | EtaQuotient | tuple) -> EtaRecipe:
    """Recipe for an eta quotient, from text, an EtaQuotient, or factor pairs."""
    if isinstance(quotient, str):
        return EtaRecipe(EtaQuotient.parse(quotient))
    if isinstance(quotient, EtaQuotient):
        return EtaRecipe(quotient)
    return EtaRecipe(EtaQuotient(tuple(quotient)))


def theta_series(name: str, step: int = 1) -> Recipe:
    """Recipe for a dissection component, optionally at q^step (e.g. a(q^3))."""
    inner: Recipe = ThetaRecipe(name)
    return inner if step == 1 else SubstRecipe(step, inner)


def jacobi_series() -> JacobiRecipe:
    return JacobiRecipe()


def qshift(recipe: Recipe, offset: int) -> Recipe:
    """Multiply a recipe by q^offset."""
    return ShiftRecipe(offset, recipe)


def _subst_to_order(inner: Series, step: int, order: int) -> Series:
    # All wanted exponents step*j < order come from inner coefficients with
    # j <= (order-1)//step, so inner can be evaluated short and spread here.
    if step < 1:
        raise ValueError(f"substitution step must be >= 1, got {step}")
    coeffs = [0] * order
    for j in range((order - 1) // step + 1):
        coeffs[j * step] = inner.coeffs[j]
    return Series(inner.ring, coeffs)


def evaluate(recipe: Recipe, ring: Ring, order: int) -> Series:
    """Evaluate a recipe to a truncated series over the given ring."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if isinstance(recipe, EtaRecipe):
        return expand_eta_quotient(recipe.quotient, ring, order)
    if isinstance(recipe, ThetaRecipe):
        return theta_component(recipe.name, ring, order)
    if isinstance(recipe, JacobiRecipe):
        return jacobi_triangular(ring, order)
    if isinstance(recipe, GfRecipe):
        build = overpartition_gf if recipe.kind == "overpartition" else opt_gf
        return build(recipe.parameter, ring, order)
    if isinstance(recipe, SumRecipe):
        total = evaluate(recipe.terms[0], ring, order)
        for term in recipe.terms[1:]:
            total = total + evaluate(term, ring, order)
        return total
    if isinstance(recipe, ProductRecipe):
        total = evaluate(recipe.factors[0], ring, order)
        for factor in recipe.factors[1:]:
            total = total * evaluate(factor, ring, order)
        return total
    if isinstance(recipe, ScaleRecipe):
        return evaluate(recipe.inner, ring, order).scale(recipe.scalar)
    if isinstance(recipe, PowRecipe):
        return evaluate(recipe.base, ring, order) ** recipe.exponent
    if isinstance(recipe, ShiftRecipe):
        return evaluate(recipe.inner, ring, order).shift(recipe.offset)
    if isinstance(recipe, SubstRecipe):
        inner_order = (order - 1) // recipe.step + 1
        return _subst_to_order(evaluate(recipe.inner, ring, inner_order), recipe.step, order)
    if isinstance(recipe, DissectRecipe):
        inner = evaluate(recipe.inner, ring, recipe.modulus * order + recipe.residue)
        return inner.dissect(recipe.modulus, recipe.residue).truncate(order)
    raise TypeError(f"unknown recipe node {type(recipe).__name__}")
