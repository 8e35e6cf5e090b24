"""Exact multivariate Laurent polynomials and rational functions.

A :class:`LaurentPoly` is a finite map from integer exponent vectors to
nonzero rational coefficients over an ordered tuple of variable names.
Operands with different variable lists are aligned by name union, so
``x + t`` is legal and yields a polynomial over ``("x", "t")``.

A :class:`RationalFn` is always stored in reduced form: numerator and
denominator are ordinary polynomials without common factor, and the
denominator is a primitive integer polynomial whose leading coefficient
(last term in the canonical order) is positive.  That makes the stored
pair canonical, so equality and hashing are structural.

Canonical term order is graded lexicographic on the fixed variable list,
printed from low to high degree: ``-t^-4 + t^-3 + t^-1``.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring as _sympy_ring

from .errors import BindingToZero, ZeroDenominator

Scalar = Union[int, Fraction]
Exps = tuple[int, ...]

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "poly_arith",
    "poly_substitute",
    "ratfn_reduce",
    "is_laurent",
    "parse_ratfn",
]


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coeff_text(c: Scalar) -> str:
    c = _norm(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _parse_coeff(text: str) -> Scalar:
    return _norm(Fraction(text))


def _merge_vars(a: Sequence[str], b: Sequence[str]) -> tuple[str, ...]:
    if tuple(a) == tuple(b):
        return tuple(a)
    seen = list(a)
    seen.extend(v for v in b if v not in a)
    return tuple(seen)


def _order_key(exps: Exps) -> tuple:
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_vars", "_terms", "_sparse", "_hash")

    def __init__(
        self,
        terms: Mapping[Exps, Scalar] | None = None,
        variables: Sequence[str] = (),
    ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        clean: dict[Exps, Scalar] = {}
        n = len(variables)
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ValueError(
                    f"exponent vector {exps} does not match variables {variables}"
                )
            if not isinstance(c, (int, Fraction)):
                c = Fraction(c)
            if c:
                clean[exps] = _norm(c)
        self._vars = variables
        self._terms = clean
        self._sparse = None
        self._hash = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _trusted(cls, terms: dict[Exps, Scalar], variables: tuple[str, ...]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._sparse = None
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Scalar, variables: Sequence[str] = ()) -> LaurentPoly:
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def var(cls, name: str, power: int = 1) -> LaurentPoly:
        return cls({(power,): 1}, (name,))

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coeff: Scalar = 1) -> LaurentPoly:
        names = tuple(powers)
        return cls({tuple(powers[v] for v in names): coeff}, names)

    @classmethod
    def coerce(cls, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.constant(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to LaurentPoly")

    # -- basic accessors ---------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[Exps, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (
            len(self._terms) == 1 and not any(next(iter(self._terms)))
        )

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self._terms.values()), 0)

    def used_variables(self) -> tuple[str, ...]:
        used = [False] * len(self._vars)
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._vars, used) if u)

    def exponent(self, exps: Exps, name: str) -> int:
        return exps[self._vars.index(name)] if name in self._vars else 0

    def min_exponents(self) -> dict[str, int]:
        return {
            v: min((e[i] for e in self._terms), default=0)
            for i, v in enumerate(self._vars)
        }

    def max_exponents(self) -> dict[str, int]:
        return {
            v: max((e[i] for e in self._terms), default=0)
            for i, v in enumerate(self._vars)
        }

    def degree(self, name: str) -> int:
        return self.max_exponents().get(name, 0)

    def coeff_of(self, powers: Mapping[str, int]) -> Scalar:
        for n in powers:
            if powers[n] and n not in self._vars:
                return 0
        exps = tuple(powers.get(v, 0) for v in self._vars)
        return self._terms.get(exps, 0)

    # -- variable bookkeeping ---------------------------------------------

    def align(self, variables: Sequence[str]) -> LaurentPoly:
        """Re-express over ``variables``, which must contain every used variable."""
        variables = tuple(variables)
        if variables == self._vars:
            return self
        index = {v: i for i, v in enumerate(variables)}
        pos = []
        for i, v in enumerate(self._vars):
            if v in index:
                pos.append(index[v])
            elif any(e[i] for e in self._terms):
                raise ValueError(f"variable {v!r} in use; cannot drop it")
            else:
                pos.append(None)
        n = len(variables)
        out: dict[Exps, Scalar] = {}
        for exps, c in self._terms.items():
            new = [0] * n
            for p, e in zip(pos, exps):
                if p is not None:
                    new[p] = e
            out[tuple(new)] = c
        return LaurentPoly._trusted(out, variables)

    def trim(self) -> LaurentPoly:
        return self.align(self.used_variables())

    def _sparse_form(self) -> frozenset:
        if self._sparse is None:
            self._sparse = frozenset(
                (tuple(sorted((v, e) for v, e in zip(self._vars, exps) if e)), c)
                for exps, c in self._terms.items()
            )
        return self._sparse

    # -- arithmetic --------------------------------------------------------

    def _pair(self, other) -> tuple[LaurentPoly, LaurentPoly]:
        other = LaurentPoly.coerce(other)
        if other._vars == self._vars:
            return self, other
        names = _merge_vars(self._vars, other._vars)
        return self.align(names), other.align(names)

    def __add__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        a, b = self._pair(other)
        out = dict(a._terms)
        for exps, c in b._terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = _norm(s)
            else:
                out.pop(exps, None)
        return LaurentPoly._trusted(out, a._vars)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._trusted({e: -c for e, c in self._terms.items()}, self._vars)

    def __sub__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._trusted({}, self._vars)
            return LaurentPoly._trusted(
                {e: _norm(c * other) for e, c in self._terms.items()}, self._vars
            )
        a, b = self._pair(other)
        out: dict[Exps, Scalar] = {}
        get = out.get
        for e1, c1 in a._terms.items():
            for e2, c2 in b._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._trusted(
            {e: _norm(c) for e, c in out.items() if c}, a._vars
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDenominator("division by zero scalar")
            return self * (Fraction(1) / other)
        other = LaurentPoly.coerce(other) if not isinstance(other, RationalFn) else other
        if isinstance(other, LaurentPoly) and other.is_monomial():
            return self * other ** -1
        return RationalFn(self) / other

    def __rtruediv__(self, other):
        return RationalFn(LaurentPoly.coerce(other)) / self

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            raise TypeError("integer exponents only")
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (exps, c), = self._terms.items()
            return LaurentPoly._trusted(
                {tuple(-e * -k for e in exps): _norm(Fraction(1) / Fraction(c) ** -k)},
                self._vars,
            )
        result = LaurentPoly.constant(1, self._vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFn):
            return other == self
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._sparse_form() == other._sparse_form()

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(self._sparse_form())
        return self._hash

    # -- transformations ---------------------------------------------------

    def map_exponents(self, fn, variables: Sequence[str]) -> LaurentPoly:
        """Apply ``fn(exps) -> new_exps`` to every term (collecting like terms)."""
        out: dict[Exps, Scalar] = {}
        for exps, c in self._terms.items():
            e = tuple(fn(exps))
            out[e] = out.get(e, 0) + c
        return LaurentPoly({e: c for e, c in out.items() if c}, variables)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = Fraction(c)
            for v, e in zip(self._vars, exps):
                if e:
                    x = Fraction(values[v])
                    if e < 0 and not x:
                        raise BindingToZero(f"{v} bound to 0 with negative exponent")
                    term *= x ** e
            total += term
        return total

    def substitute(self, bindings: Mapping[str, object]) -> RationalFn:
        return poly_substitute(self, bindings)

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        if not self._terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self._terms.values()]
        dens = [Fraction(c).denominator for c in self._terms.values()]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        return Fraction(g, math.lcm(*dens))

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def sorted_terms(self) -> list[tuple[Exps, Scalar]]:
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]))

    def leading(self) -> tuple[Exps, Scalar]:
        return max(self._terms.items(), key=lambda t: _order_key(t[0]))

    # -- output ------------------------------------------------------------

    def _monomial_text(self, exps: Exps, latex: bool) -> str:
        parts = []
        for v, e in zip(self._vars, exps):
            if e == 0:
                continue
            if e == 1:
                parts.append(v)
            elif latex:
                parts.append(f"{v}^{{{e}}}")
            else:
                parts.append(f"{v}^{e}")
        return (" " if latex else "*").join(parts)

    def to_text(self, latex: bool = False) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (exps, c) in enumerate(self.sorted_terms()):
            mono = self._monomial_text(exps, latex)
            neg = c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            elif mono:
                if latex and isinstance(mag, Fraction):
                    cs = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
                else:
                    cs = _coeff_text(mag)
                body = f"{cs} {mono}" if latex else f"{cs}*{mono}"
            else:
                if latex and isinstance(mag, Fraction):
                    body = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
                else:
                    body = _coeff_text(mag)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def to_latex(self) -> str:
        return self.to_text(latex=True)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r}, variables={self._vars})"

    def to_json(self) -> dict:
        return {
            "variables": list(self._vars),
            "terms": [
                {"coeff": _coeff_text(c), "exps": list(e)} for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping | str) -> LaurentPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            {tuple(t["exps"]): _parse_coeff(t["coeff"]) for t in data["terms"]},
            data["variables"],
        )


# ---------------------------------------------------------------------------
# reduction backend

@lru_cache(maxsize=256)
def _zz_ring(names: tuple[str, ...]):
    return _sympy_ring(list(names), ZZ)[0]


def _lcm_of_denominators(*polys: LaurentPoly) -> int:
    dens = [Fraction(c).denominator for p in polys for c in p._terms.values()]
    return math.lcm(*dens) if dens else 1


def _to_polynomial_pair(num: LaurentPoly, den: LaurentPoly):
    """Shift both by a common monomial so every exponent is nonnegative."""
    names = _merge_vars(num.variables, den.variables)
    num, den = num.align(names), den.align(names)
    mins_n, mins_d = num.min_exponents(), den.min_exponents()
    shift = tuple(max(0, -mins_n[v], -mins_d[v]) for v in names)
    if any(shift):
        def move(p):
            return LaurentPoly._trusted(
                {tuple(e + s for e, s in zip(exps, shift)): c for exps, c in p._terms.items()},
                names,
            )
        num, den = move(num), move(den)
    return num, den, names


def _reduce_pair(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero():
        return LaurentPoly(), LaurentPoly.constant(1)
    num, den, names = _to_polynomial_pair(num, den)
    scale = _lcm_of_denominators(num, den)
    if scale != 1:
        num, den = num * scale, den * scale
    used = _merge_vars(num.used_variables(), den.used_variables())
    used = tuple(v for v in names if v in used)
    num, den = num.align(used), den.align(used)
    if used:
        R = _zz_ring(used)
        pn = R.from_dict({e: int(c) for e, c in num._terms.items()})
        pd = R.from_dict({e: int(c) for e, c in den._terms.items()})
        _, a, b = pn.cofactors(pd)
        content, b = b.primitive()
        content = int(content)
        a_terms = {tuple(e): _norm(Fraction(int(c), content)) for e, c in a.terms()}
        b_terms = {tuple(e): int(c) for e, c in b.terms()}
    else:
        a_terms = {(): _norm(Fraction(num.constant_value()) / Fraction(den.constant_value()))}
        b_terms = {(): 1}
    n_poly = LaurentPoly._trusted(a_terms, used)
    d_poly = LaurentPoly._trusted(b_terms, used)
    if d_poly.leading()[1] < 0:
        n_poly, d_poly = -n_poly, -d_poly
    n_poly, d_poly = n_poly.trim(), d_poly.trim()
    return n_poly, d_poly


class RationalFn:
    """Reduced quotient of two polynomials with rational coefficients."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, numerator, denominator=1):
        num = LaurentPoly.coerce(numerator) if not isinstance(numerator, RationalFn) else None
        if num is None:
            f = numerator / denominator
            self._num, self._den, self._hash = f._num, f._den, None
            return
        if isinstance(denominator, RationalFn):
            f = RationalFn(num) / denominator
            self._num, self._den, self._hash = f._num, f._den, None
            return
        den = LaurentPoly.coerce(denominator)
        self._num, self._den = _reduce_pair(num, den)
        self._hash = None

    @classmethod
    def _trusted(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFn:
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._hash = num, den, None
        return obj

    @classmethod
    def coerce(cls, other) -> RationalFn:
        if isinstance(other, RationalFn):
            return other
        return cls(other)

    @classmethod
    def var(cls, name: str) -> RationalFn:
        return cls._trusted(LaurentPoly.var(name), LaurentPoly.constant(1))

    @property
    def numerator(self) -> LaurentPoly:
        return self._num

    @property
    def denominator(self) -> LaurentPoly:
        return self._den

    @property
    def variables(self) -> tuple[str, ...]:
        return _merge_vars(self._num.variables, self._den.variables)

    def __bool__(self) -> bool:
        return bool(self._num)

    def is_zero(self) -> bool:
        return self._num.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = RationalFn.coerce(other)
        if self._den == other._den:
            return RationalFn(self._num + other._num, self._den)
        return RationalFn(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        return RationalFn._trusted(-self._num, self._den)

    def __sub__(self, other):
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other):
        return RationalFn.coerce(other) + (-self)

    def __mul__(self, other):
        other = RationalFn.coerce(other)
        return RationalFn(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFn:
        if self.is_zero():
            raise ZeroDenominator("inverse of zero")
        return RationalFn(self._den, self._num)

    def __truediv__(self, other):
        other = RationalFn.coerce(other)
        if other.is_zero():
            raise ZeroDenominator("division by zero")
        return RationalFn(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) / self

    def __pow__(self, k: int) -> RationalFn:
        if k < 0:
            return self.inverse() ** -k
        return RationalFn._trusted(self._num ** k, self._den ** k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFn(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            if self._den.is_constant():
                self._hash = hash(self._num)
            else:
                self._hash = hash((self._num, self._den))
        return self._hash

    # -- queries -----------------------------------------------------------

    def is_laurent(self) -> LaurentPoly | None:
        return is_laurent(self)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        d = self._den.evaluate(values)
        if not d:
            raise ZeroDenominator("evaluation point is a pole")
        return self._num.evaluate(values) / d

    def substitute(self, bindings: Mapping[str, object]) -> RationalFn:
        return poly_substitute(self._num, bindings) / poly_substitute(self._den, bindings)

    def key(self) -> tuple:
        """Totally ordered canonical key (usable for sorting and hashing)."""
        def form(p: LaurentPoly):
            return tuple(
                sorted(
                    (tuple(sorted((v, e) for v, e in zip(p.variables, exps) if e)),
                     Fraction(c).numerator, Fraction(c).denominator)
                    for exps, c in p.items()
                )
            )
        return (form(self._num), form(self._den))

    def to_text(self, latex: bool = False) -> str:
        n = self._num.to_text(latex)
        if self._den.is_constant() and self._den.constant_value() == 1:
            return n
        d = self._den.to_text(latex)
        if latex:
            return f"\\frac{{{n}}}{{{d}}}"
        if len(self._num) > 1:
            n = f"({n})"
        if len(self._den) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"RationalFn({self.to_text()!r})"

    def to_json(self) -> dict:
        return {"numerator": self._num.to_json(), "denominator": self._den.to_json()}

    @classmethod
    def from_json(cls, data: Mapping | str) -> RationalFn:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            LaurentPoly.from_json(data["numerator"]),
            LaurentPoly.from_json(data["denominator"]),
        )


# ---------------------------------------------------------------------------
# operation-level API


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_substitute(p: LaurentPoly, bindings: Mapping[str, object]) -> RationalFn:
    """Substitute rational functions for variables of ``p``.

    Unbound variables are left in place.  All terms are brought over one
    common denominator before a single reduction.
    """
    p = LaurentPoly.coerce(p)
    if p.is_zero():
        return RationalFn(0)
    mins, maxs = p.min_exponents(), p.max_exponents()
    num_of: dict[str, LaurentPoly] = {}
    den_of: dict[str, LaurentPoly] = {}
    for v in p.variables:
        if v in bindings:
            f = RationalFn.coerce(bindings[v])
        else:
            f = RationalFn.var(v)
        if mins[v] < 0 and f.is_zero():
            raise BindingToZero(f"variable {v!r} has negative exponent but is bound to 0")
        num_of[v], den_of[v] = f.numerator, f.denominator

    pos = {v: max(maxs[v], 0) for v in p.variables}
    neg = {v: max(-mins[v], 0) for v in p.variables}

    @lru_cache(maxsize=None)
    def power(v: str, which: str, k: int) -> LaurentPoly:
        base = num_of[v] if which == "n" else den_of[v]
        return base ** k

    common = LaurentPoly.constant(1)
    for v in p.variables:
        common = common * power(v, "d", pos[v]) * power(v, "n", neg[v])

    total = LaurentPoly()
    for exps, c in p.items():
        term = LaurentPoly.constant(c)
        for v, e in zip(p.variables, exps):
            if e >= 0:
                term = term * power(v, "n", e) * power(v, "d", pos[v] - e) * power(v, "n", neg[v])
            else:
                term = term * power(v, "d", -e) * power(v, "d", pos[v]) * power(v, "n", neg[v] + e)
        total = total + term
    return RationalFn(total, common)


def ratfn_reduce(f: RationalFn | tuple) -> RationalFn:
    """Return ``f`` in reduced form; accepts a ``(numerator, denominator)`` pair."""
    if isinstance(f, tuple):
        return RationalFn(*f)
    return RationalFn(f.numerator, f.denominator)


def is_laurent(f: RationalFn | LaurentPoly) -> LaurentPoly | None:
    """The Laurent polynomial equal to ``f``, or ``None`` if the denominator is not a monomial."""
    if isinstance(f, LaurentPoly):
        return f
    if not f.denominator.is_monomial():
        return None
    return f.numerator * f.denominator ** -1


def parse_ratfn(text: str) -> RationalFn:
    """Parse an arithmetic expression (``+ - * / ^`` and parentheses) into a reduced function."""
    import sympy

    expr = sympy.sympify(text.replace("^", "**"))
    num, den = sympy.fraction(sympy.together(expr))

    def convert(e) -> LaurentPoly:
        syms = sorted(e.free_symbols, key=lambda s: s.name)
        if not syms:
            return LaurentPoly.constant(Fraction(str(sympy.Rational(e))))
        poly = sympy.Poly(sympy.expand(e), *syms)
        return LaurentPoly(
            {m: Fraction(str(c)) for m, c in poly.terms()}, [s.name for s in syms]
        )

    return RationalFn(convert(num), convert(den))


def laurent_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    total = LaurentPoly()
    for p in polys:
        total = total + p
    return total
