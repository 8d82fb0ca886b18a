"""Integer Laurent polynomials in one variable."""

from __future__ import annotations

from typing import Iterator, Mapping

__all__ = ["LaurentPoly"]


class LaurentPoly:
    """Finitely supported map exponent -> nonzero integer coefficient."""

    __slots__ = ("_coeffs", "var")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "q"):
        self._coeffs = {int(e): int(c) for e, c in (coeffs or {}).items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "q") -> LaurentPoly:
        return cls({exponent: coeff}, var)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._coeffs.items()))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._coeffs.items()))

    def __getitem__(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly({0: other}, self.var)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()}, self.var)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()}, self.var)
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers only for monomials; use monomial()")
        result = LaurentPoly({0: 1}, self.var)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, x):
        return sum(c * x**e for e, c in self._coeffs.items())

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._coeffs.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int], var: str = "q") -> LaurentPoly:
        return cls({int(e): c for e, c in data.items()}, var)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items()):
            if e == 0:
                mono = str(abs(c))
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}{mono}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r}, var={self.var!r})"
