"""Multivariate Laurent polynomials with integer coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Mapping


class LaurentPoly:
    """An immutable Laurent polynomial in named variables.

    Terms map exponent tuples (one entry per variable in ``variables``) to
    nonzero integers.  Polynomials in different variable sets are combined by
    extending both to the union of their variables.
    """

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            if c:
                if len(exps) != len(self.variables):
                    raise ValueError("exponent vector does not match variables")
                clean[tuple(exps)] = int(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: int, variables: Iterable[str] = ()) -> LaurentPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Iterable[str] | None = None) -> LaurentPoly:
        variables = tuple(variables) if variables is not None else (name,)
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    def extend(self, variables: Iterable[str]) -> LaurentPoly:
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: k for k, v in enumerate(variables)}
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.variables, exps):
                if e and v not in index:
                    raise ValueError(f"variable {v} missing from {variables}")
                if v in index:
                    new[index[v]] = e
            out[tuple(new)] = c
        return LaurentPoly(variables, out)

    def _common(self, other: LaurentPoly | int) -> tuple[LaurentPoly, LaurentPoly]:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(int(other), self.variables)
        if other.variables == self.variables:
            return self, other
        names = list(self.variables) + [v for v in other.variables if v not in self.variables]
        return self.extend(names), other.extend(names)

    def __add__(self, other):
        a, b = self._common(other)
        out = dict(a.terms)
        for exps, c in b.terms.items():
            out[exps] = out.get(exps, 0) + c
        return LaurentPoly(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -int(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            ((exps, c),) = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return LaurentPoly(self.variables, {tuple(-e for e in exps): c}) ** (-k)
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                other = LaurentPoly.constant(other, self.variables)
            else:
                return NotImplemented
        a, b = self._common(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        if self._hash is None:
            live = [k for k, v in enumerate(self.variables) if any(e[k] for e in self.terms)]
            key = frozenset(
                (tuple((self.variables[k], e[k]) for k in live if e[k]), c) for e, c in self.terms.items()
            )
            self._hash = hash(key)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficients(self) -> list[int]:
        return [self.terms[e] for e in sorted(self.terms)]

    def _index(self, name: str) -> int:
        return self.variables.index(name)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name`` (0 when absent); the zero polynomial raises."""
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        if name not in self.variables:
            return 0
        k = self._index(name)
        return max(e[k] for e in self.terms)

    def min_degree(self, name: str) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        if name not in self.variables:
            return 0
        k = self._index(name)
        return min(e[k] for e in self.terms)

    def weighted_degrees(self, weights: Mapping[str, int]) -> set[int]:
        ws = [weights.get(v, 0) for v in self.variables]
        return {sum(w * e for w, e in zip(ws, exps)) for exps in self.terms}

    def substitute(self, values: Mapping[str, LaurentPoly | int]) -> LaurentPoly:
        """Replace variables by polynomials; negative powers need monomial values."""
        result = LaurentPoly.constant(0)
        for exps, c in self.terms.items():
            term: LaurentPoly | int = LaurentPoly.constant(c)
            for v, e in zip(self.variables, exps):
                if v in values:
                    value = values[v]
                    if not isinstance(value, LaurentPoly):
                        value = LaurentPoly.constant(int(value))
                    term = term * value**e
                else:
                    term = term * LaurentPoly.var(v) ** e
            result = result + term
        return result

    def restrict(self, variables: Iterable[str]) -> LaurentPoly:
        """Re-express over ``variables``, dropping variables absent from every term."""
        return self.extend(tuple(variables))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.variables!r}, {self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            factors = [str(self.terms[exps])]
            factors += [f"{v}^{e}" for v, e in zip(self.variables, exps) if e]
            parts.append("*".join(factors))
        return " + ".join(parts)


def variables(*names: str) -> tuple[LaurentPoly, ...]:
    return tuple(LaurentPoly.var(n, names) for n in names)
