"""
Exact Laurent polynomials with integer coefficients.

``LaurentPolynomial`` is univariate (variable ``v`` for the Hecke algebra,
``q`` for R-polynomials).  ``BiLaurentPolynomial`` carries the two-variable
generating functions in ``q`` and ``t``.  Both are immutable and store only
nonzero coefficients, so the zero polynomial is the empty mapping.

    >>> v = LaurentPolynomial.gen("v")
    >>> str((v + v**-1) * v)
    'v^2 + 1'
    >>> q = LaurentPolynomial.gen("q")
    >>> str((q - 1) * (q - 1))
    'q^2 - 2q + 1'
"""

from __future__ import annotations

from typing import Any, Hashable, Iterator, Mapping


class _SparsePolynomial:
    """Shared arithmetic for sparse integer polynomials keyed by exponents."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[Hashable, int] | None = None):
        clean = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            if c:
                clean[self._check_key(k)] = int(c)
        self._coeffs = clean
        self._hash = None

    # subclass hooks
    def _check_key(self, key):
        raise NotImplementedError

    def _add_keys(self, a, b):
        raise NotImplementedError

    def _zero_key(self):
        raise NotImplementedError

    def _same_kind(self, other) -> bool:
        return type(other) is type(self)

    def _new(self, coeffs, other=None):
        raise NotImplementedError

    def _coerce(self, other):
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return self._new({self._zero_key(): other})
        if self._same_kind(other):
            return other
        return NotImplemented

    # mapping-like access
    @property
    def coefficients(self) -> dict:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __iter__(self) -> Iterator:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, key) -> int:
        return self._coeffs.get(key, 0)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return self._new(out, other)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self._coeffs.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for ka, ca in self._coeffs.items():
            for kb, cb in other._coeffs.items():
                k = self._add_keys(ka, kb)
                out[k] = out.get(k, 0) + ca * cb
        return self._new(out, other)

    __rmul__ = __mul__

    def scale(self, c: int):
        return self._new({k: c * a for k, a in self._coeffs.items()})

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._coeffs.items())))
        return self._hash


def _format_sum(terms: list[tuple[int, str]]) -> str:
    """Join (coefficient, monomial) pairs with explicit signs; '' monomial is 1."""
    if not terms:
        return "0"
    parts = []
    for n, (c, mono) in enumerate(terms):
        mag = abs(c)
        if mono == "":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}"
        if n == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _power(var: str, e: int, latex: bool) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{{{e}}}" if latex else f"{var}^{e}"


class LaurentPolynomial(_SparsePolynomial):
    """Univariate integer Laurent polynomial; ``var`` only affects rendering."""

    __slots__ = ("var",)

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "v"):
        self.var = var
        super().__init__(coeffs)

    def _check_key(self, key):
        if isinstance(key, bool) or not isinstance(key, int):
            raise TypeError(f"exponents must be integers, got {key!r}")
        return key

    def _add_keys(self, a, b):
        return a + b

    def _zero_key(self):
        return 0

    def _new(self, coeffs, other=None):
        var = self.var
        if other is not None and self.is_constant() and not other.is_constant():
            var = other.var
        return LaurentPolynomial(coeffs, var)

    def _coerce(self, other):
        other = super()._coerce(other)
        if isinstance(other, LaurentPolynomial) and other.var != self.var:
            # constants are variable-free
            if not (self.is_constant() or other.is_constant()):
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return other

    @classmethod
    def constant(cls, c: int, var: str = "v") -> LaurentPolynomial:
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "v") -> LaurentPolynomial:
        return cls({exponent: coeff}, var)

    @classmethod
    def gen(cls, var: str = "v") -> LaurentPolynomial:
        return cls({1: 1}, var)

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._coeffs)

    def __pow__(self, n: int) -> LaurentPolynomial:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._coeffs) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._coeffs.items()
            if c not in (1, -1):
                raise ValueError("inverse of a monomial needs a unit coefficient")
            return LaurentPolynomial({e * n: c ** (-n)}, self.var)
        result = LaurentPolynomial.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar_invert(self) -> LaurentPolynomial:
        """Substitute the variable by its inverse (negate every exponent)."""
        return LaurentPolynomial({-e: c for e, c in self._coeffs.items()}, self.var)

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    def low_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return min(self._coeffs)

    def leading_coefficient(self) -> int:
        return self._coeffs[self.degree()]

    def __call__(self, value):
        """Evaluate; ``value`` may be anything supporting ``**`` with ints."""
        return sum(c * value ** e for e, c in self._coeffs.items())

    def with_var(self, var: str) -> LaurentPolynomial:
        return LaurentPolynomial(self._coeffs, var)

    def render(self, latex: bool = False) -> str:
        terms = [
            (self._coeffs[e], _power(self.var, e, latex))
            for e in sorted(self._coeffs, reverse=True)
        ]
        return _format_sum(terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._coeffs!r}, var={self.var!r})"


class BiLaurentPolynomial(_SparsePolynomial):
    """
    Integer Laurent polynomial in ``q`` and ``t``, keyed by ``(q_exp, t_exp)``.

    Rendering orders terms by ascending ``q`` exponent, then descending ``t``
    exponent, so a generating function reads ``t^2 + 2q + q^2t^-2``.
    """

    __slots__ = ()
    variables = ("q", "t")

    def _check_key(self, key):
        if (
            not isinstance(key, tuple)
            or len(key) != 2
            or not all(isinstance(e, int) and not isinstance(e, bool) for e in key)
        ):
            raise TypeError(f"keys must be (q_exp, t_exp) integer pairs, got {key!r}")
        return key

    def _add_keys(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _zero_key(self):
        return (0, 0)

    def _new(self, coeffs, other=None):
        return BiLaurentPolynomial(coeffs)

    @classmethod
    def monomial(cls, q_exp: int, t_exp: int, coeff: int = 1) -> BiLaurentPolynomial:
        return cls({(q_exp, t_exp): coeff})

    def substitute(self, q, t):
        return sum(c * q ** a * t ** b for (a, b), c in self._coeffs.items())

    def specialize_t(self, value: int = 1) -> LaurentPolynomial:
        """Set ``t`` to an integer unit (1 or -1) leaving a polynomial in ``q``."""
        if value not in (1, -1):
            raise ValueError("t may only be specialised to 1 or -1")
        out: dict[int, int] = {}
        for (a, b), c in self._coeffs.items():
            out[a] = out.get(a, 0) + c * (-1 if value == -1 and b % 2 else 1)
        return LaurentPolynomial(out, "q")

    def render(self, latex: bool = False) -> str:
        keys = sorted(self._coeffs, key=lambda k: (k[0], -k[1]))
        terms = [
            (self._coeffs[k], _power("q", k[0], latex) + _power("t", k[1], latex))
            for k in keys
        ]
        return _format_sum(terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BiLaurentPolynomial({self._coeffs!r})"
