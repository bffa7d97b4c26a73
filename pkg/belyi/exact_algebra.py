# Description: Exact arithmetic over Q and Q(i): univariate polynomials, rational functions, resultants.
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from belyi.exceptions import ParseError, PoleError, ZeroPolynomialError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """
    An element re + im*i of Q(i).

    Explanation:
    Both parts are reduced fractions. Equality is structural and a Gaussian rational with zero imaginary
        part compares (and hashes) equal to the plain rational, so Q embeds into Q(i) transparently.

    Args:
        - re (Fraction): Real part.
        - im (Fraction): Imaginary part. Defaults to 0.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _coerce(other) -> Optional["GaussianRational"]:
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(Fraction(other))
        return None

    def __add__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) + other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) - other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) * other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (complex, float)):
            return complex(self) / other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        base = self if exponent >= 0 else self.inverse()
        result = GaussianRational(Fraction(1))
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}*i"
        if self.re == 0:
            return imag
        return f"{self.re}{imag}" if imag.startswith("-") else f"{self.re}+{imag}"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(Fraction(0), Fraction(1))


def to_scalar(value) -> Scalar:
    """Canonical form of an exact scalar: a Fraction, or a GaussianRational with nonzero imaginary part."""
    if isinstance(value, GaussianRational):
        return value.re if value.im == 0 else value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def _inverse(c: Scalar) -> Scalar:
    return to_scalar(Fraction(1) / c)


@dataclass(frozen=True, eq=False)
class Poly:
    """
    A univariate polynomial with exact coefficients.

    Explanation:
    Coefficients are stored from the constant term upwards with no trailing zeros, so the zero polynomial
        has an empty coefficient tuple and degree -1. The variable name only affects printing.

    Args:
        - coeffs (tuple[Scalar, ...]): Coefficients, constant term first.
        - var (str): Variable name used by ``str``. Defaults to "x".
    """

    coeffs: tuple = ()
    var: str = field(default="x")

    def __post_init__(self):
        normalized = [to_scalar(c) for c in self.coeffs]
        while normalized and normalized[-1] == 0:
            normalized.pop()
        object.__setattr__(self, "coeffs", tuple(normalized))

    @classmethod
    def constant(cls, c, var: str = "x") -> "Poly":
        return cls((c,), var)

    @classmethod
    def gen(cls, var: str = "x") -> "Poly":
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, c, k: int, var: str = "x") -> "Poly":
        return cls((0,) * k + (c,), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Scalar:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _lift(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        try:
            return Poly.constant(other, self.var)
        except TypeError:
            return None

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(tuple(self.coefficient(k) + o.coefficient(k) for k in range(n)), self.var)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly((), self.var)
        product = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                product[i + j] = product[i + j] + a * b
        return Poly(tuple(product), self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(1, self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroPolynomialError("polynomial division by zero")
        remainder = list(self.coeffs)
        m = o.degree
        if self.degree < m:
            return Poly((), self.var), self
        quotient = [Fraction(0)] * (self.degree - m + 1)
        inv_lead = _inverse(o.lead)
        for k in range(self.degree, m - 1, -1):
            c = remainder[k] * inv_lead
            if c == 0:
                continue
            quotient[k - m] = c
            for j, b in enumerate(o.coeffs):
                remainder[k - m + j] = remainder[k - m + j] - c * b
        return Poly(tuple(quotient), self.var), Poly(tuple(remainder[:m]), self.var)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, value):
        """Horner evaluation at a scalar, a complex number or another polynomial."""
        result = Poly((), self.var) if isinstance(value, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs))[1:], self.var)

    def monic(self) -> "Poly":
        return self * _inverse(self.lead) if self.coeffs else self

    def reversed(self, degree: Optional[int] = None) -> "Poly":
        """x^degree * p(1/x); degree defaults to deg p."""
        degree = self.degree if degree is None else degree
        if degree < self.degree:
            raise ValueError(f"reversal degree {degree} below polynomial degree {self.degree}")
        padded = self.coeffs + (Fraction(0),) * (degree - self.degree)
        return Poly(tuple(reversed(padded)), self.var)

    def is_palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def is_real(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def complex_coefficients(self) -> list[complex]:
        """Coefficients as complex numbers, highest degree first (numpy convention)."""
        return [complex(c) for c in reversed(self.coeffs)]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        several = len([c for c in self.coeffs if c != 0]) > 1
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                text = f"({c})" if several and isinstance(c, GaussianRational) else str(c)
            else:
                mono = self.var if k == 1 else f"{self.var}^{k}"
                if c == 1:
                    text = mono
                elif c == -1:
                    text = f"-{mono}"
                elif isinstance(c, GaussianRational):
                    text = f"({c})*{mono}"
                else:
                    text = f"{c}*{mono}"
            terms.append(text if not terms or text.startswith("-") else f"+{text}")
        return "".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self})"


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class _PolyParser:
    """Recursive-descent parser for sums, products, quotients by constants, integer powers and parentheses."""

    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.tokens: list[tuple[str, str]] = []
        for number, name, symbol in _TOKEN.findall(text):
            if number:
                self.tokens.append(("num", number))
            elif name:
                self.tokens.append(("name", name))
            elif symbol:
                self.tokens.append(("sym", symbol))
        self.pos = 0

    def peek(self) -> Optional[tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        token = self.peek()
        if token is None:
            raise ParseError(f"unexpected end of input in {self.text!r}")
        self.pos += 1
        return token

    def expect(self, symbol: str) -> None:
        kind, value = self.take()
        if kind != "sym" or value != symbol:
            raise ParseError(f"expected {symbol!r}, found {value!r} in {self.text!r}")

    def parse(self) -> Poly:
        if not self.tokens:
            raise ParseError("empty polynomial text")
        result = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return result

    def expr(self) -> Poly:
        result = self.term()
        while (token := self.peek()) and token in (("sym", "+"), ("sym", "-")):
            self.take()
            result = result + self.term() if token[1] == "+" else result - self.term()
        return result

    def term(self) -> Poly:
        result = self.unary()
        while (token := self.peek()) and token in (("sym", "*"), ("sym", "/")):
            self.take()
            operand = self.unary()
            if token[1] == "*":
                result = result * operand
            else:
                if operand.degree != 0:
                    raise ParseError(f"division by a non-constant in {self.text!r}")
                result = result * _inverse(operand.lead)
        return result

    def unary(self) -> Poly:
        token = self.peek()
        if token == ("sym", "-"):
            self.take()
            return -self.unary()
        if token == ("sym", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, value = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}")
            return base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value = self.take()
        if kind == "num":
            return Poly.constant(int(value), self.var)
        if kind == "name":
            if value == "i":
                return Poly.constant(I, self.var)
            if value == self.var:
                return Poly.gen(self.var)
            raise ParseError(f"unknown symbol {value!r} in {self.text!r}")
        if value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {value!r} in {self.text!r}")


def parse_poly(text: str, var: str = "x") -> Poly:
    """
    Parse canonical or factored ASCII polynomial text; ``i`` is the imaginary unit.

    >>> str(parse_poly("(x-1)^2"))
    'x^2-2*x+1'

    :param text: polynomial text such as "432*x^6+648*x^5" or "(2+i)*x+(2-i)"
    :param var: variable name
    :return: the parsed polynomial
    """
    return _PolyParser(text, var).parse()


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (zero when both inputs are zero)."""
    a, b = p, q
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_decomposition(p: Poly) -> list[tuple[int, Poly]]:
    """
    Yun's square-free decomposition over a field of characteristic 0.

    Explanation:
    Returns pairs (multiplicity, factor) with monic, square-free, pairwise coprime factors of positive degree,
        in increasing multiplicity, such that p = lead(p) * prod(factor ** multiplicity).

    Args:
        - p (Poly): A nonzero polynomial.

    Returns:
        - list[tuple[int, Poly]]: The decomposition; empty for constants.

    Raises:
        - ZeroPolynomialError: If p is zero.
    """
    if p.is_zero():
        raise ZeroPolynomialError("square-free decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    derivative = p.derivative()
    a0 = poly_gcd(p, derivative)
    b = p.exact_div(a0)
    c = derivative.exact_div(a0)
    d = c - b.derivative()
    result = []
    multiplicity = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            result.append((multiplicity, a))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        multiplicity += 1
    return result


def root_multiplicities(p: Poly) -> list[int]:
    """Multiplicities of the distinct roots of p over the algebraic closure, in decreasing order."""
    multiplicities = []
    for multiplicity, factor in squarefree_decomposition(p):
        multiplicities.extend([multiplicity] * factor.degree)
    return sorted(multiplicities, reverse=True)


def is_square_up_to_constant(p: Poly) -> tuple[bool, Optional[Poly], Optional[Scalar]]:
    """
    Decide whether p = c * s^2 and return (True, s, c) with s monic, else (False, None, None).

    >>> is_square_up_to_constant(parse_poly("4*(x^2+1)^2"))[0]
    True
    """
    if p.is_zero():
        raise ZeroPolynomialError("square test of the zero polynomial")
    root = Poly.constant(1, p.var)
    for multiplicity, factor in squarefree_decomposition(p):
        if multiplicity % 2:
            return False, None, None
        root = root * factor ** (multiplicity // 2)
    return True, root, p.lead


def _exact_quotient(a, b):
    if isinstance(b, Poly):
        if b.degree == 0:
            return a * _inverse(b.lead)
        return (a if isinstance(a, Poly) else Poly.constant(a, b.var)).exact_div(b)
    return a * _inverse(to_scalar(b))


def _bareiss_determinant(matrix: list[list]) -> object:
    """Fraction-free determinant; entries may be scalars or polynomials."""
    size = len(matrix)
    m = [row[:] for row in matrix]
    sign = 1
    previous = Fraction(1)
    for k in range(size - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if pivot is None:
                return m[k][k] * 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = _exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous)
        previous = m[k][k]
    return m[size - 1][size - 1] if sign == 1 else -m[size - 1][size - 1]


Coefficients = Union[Poly, Sequence]


def _coefficient_list(p: Coefficients) -> list:
    coeffs = list(p.coeffs) if isinstance(p, Poly) else list(p)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def resultant(p: Coefficients, q: Coefficients):
    """
    Resultant of two polynomials in the eliminated variable.

    Explanation:
    Either argument is a ``Poly`` with scalar coefficients, or a sequence of coefficients (constant term first)
        in the eliminated variable whose entries are scalars or ``Poly`` objects in the surviving variable.
    The Sylvester matrix determinant is computed by fraction-free elimination, so Res(p, q) vanishes exactly
        when p and q share a root, and Res(p, q) = (-1)^(deg p * deg q) * Res(q, p).

    Args:
        - p (Coefficients): First polynomial.
        - q (Coefficients): Second polynomial.

    Returns:
        - Scalar | Poly: The resultant; a ``Poly`` in the surviving variable for bivariate input.

    Raises:
        - ZeroPolynomialError: If either input is zero.
        - ValueError: If both inputs are constant in the eliminated variable.

    Examples:
        >>> resultant(parse_poly("x^5-1"), parse_poly("5*x^4"))
        Fraction(3125, 1)
    """
    p_coeffs, q_coeffs = _coefficient_list(p), _coefficient_list(q)
    if not p_coeffs or not q_coeffs:
        raise ZeroPolynomialError("resultant with a zero polynomial")
    m, n = len(p_coeffs) - 1, len(q_coeffs) - 1
    if m == 0 and n == 0:
        raise ValueError("resultant of two constants is undefined")
    polys = [c for c in p_coeffs + q_coeffs if isinstance(c, Poly)]
    if polys:
        var = polys[0].var
        lift = lambda c: c if isinstance(c, Poly) else Poly.constant(c, var)  # noqa: E731
        zero = Poly((), var)
    else:
        lift = to_scalar
        zero = Fraction(0)
    size = m + n
    matrix = [[zero] * size for _ in range(size)]
    for row in range(n):
        for k, c in enumerate(reversed(p_coeffs)):
            matrix[row][row + k] = lift(c)
    for row in range(m):
        for k, c in enumerate(reversed(q_coeffs)):
            matrix[n + row][row + k] = lift(c)
    result = _bareiss_determinant(matrix)
    logger.debug("resultant of degrees %d and %d: %s", m, n, result)
    return result


def discriminant(p: Poly) -> Scalar:
    """Discriminant (-1)^(n(n-1)/2) * Res(p, p') / lead(p)."""
    n = p.degree
    if n < 1:
        raise ValueError("discriminant needs a polynomial of positive degree")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return to_scalar(sign * resultant(p, p.derivative()) / p.lead)


def discriminant_bring(a, b) -> Scalar:
    """
    Discriminant of the Bring quintic x^5 + a*x + b.

    >>> discriminant_bring(0, 1)
    Fraction(3125, 1)
    """
    a, b = to_scalar(a), to_scalar(b)
    return to_scalar(256 * a ** 5 + 3125 * b ** 4)


def first_difference(lhs: Poly, rhs: Poly) -> Optional[tuple[int, Scalar, Scalar]]:
    """The highest degree where lhs and rhs differ with both coefficients, or None when equal."""
    for k in range(max(lhs.degree, rhs.degree), -1, -1):
        if lhs.coefficient(k) != rhs.coefficient(k):
            return k, lhs.coefficient(k), rhs.coefficient(k)
    return None


@dataclass(frozen=True)
class IdentityCheck:
    """Verdict of an exact identity check with a human-readable description of the first mismatch."""

    holds: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def compare_polys(lhs: Poly, rhs: Poly, label: str = "") -> IdentityCheck:
    difference = first_difference(lhs, rhs)
    if difference is None:
        return IdentityCheck(True)
    k, left, right = difference
    detail = f"{label}coefficient of {lhs.var}^{k} differs: {left} != {right}"
    logger.warning(detail)
    return IdentityCheck(False, detail)


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """
    A quotient num/den of polynomials in lowest terms.

    Explanation:
    On construction the common factor is divided out and the denominator is made monic, so equal functions
        have identical numerators and denominators.

    Args:
        - num (Poly): Numerator.
        - den (Poly): Denominator. Defaults to 1.

    Raises:
        - ZeroPolynomialError: If den is zero.
    """

    num: Poly
    den: Poly = None

    def __post_init__(self):
        num, den = self.num, self.den if self.den is not None else Poly.constant(1, self.num.var)
        if den.is_zero():
            raise ZeroPolynomialError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly((), num.var), Poly.constant(1, num.var)
        else:
            common = poly_gcd(num, den)
            if common.degree > 0:
                num, den = num.exact_div(common), den.exact_div(common)
            scale = _inverse(den.lead)
            num, den = num * scale, den * scale
        object.__setattr__(self, "num", num.with_var(self.num.var))
        object.__setattr__(self, "den", den.with_var(self.num.var))

    @classmethod
    def parse(cls, num: str, den: str = "1", var: str = "x") -> "RationalFunction":
        return cls(parse_poly(num, var), parse_poly(den, var))

    @classmethod
    def identity(cls, var: str = "x") -> "RationalFunction":
        return cls(Poly.gen(var))

    @property
    def var(self) -> str:
        return self.num.var

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __call__(self, value):
        denominator = self.den(value)
        if denominator == 0:
            raise PoleError(f"{self} has a pole at {value}")
        return self.num(value) / denominator

    def reciprocal(self) -> "RationalFunction":
        if self.num.is_zero():
            raise PoleError("reciprocal of the zero function")
        return RationalFunction(self.den, self.num)

    def __add__(self, other) -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction(Poly.constant(other, self.var))
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other) -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction(Poly.constant(other, self.var))
        return RationalFunction(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other) -> "RationalFunction":
        if not isinstance(other, RationalFunction):
            other = RationalFunction(Poly.constant(other, self.var))
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def compose(outer: RationalFunction, inner: RationalFunction) -> RationalFunction:
    """
    The composition outer(inner(y)), reduced.

    Explanation:
    With m = deg(outer), both numerator and denominator of outer are homogenized to degree m and evaluated at
        inner = p/q, i.e. sum(c_k * p^k * q^(m-k)). Degrees multiply for nonconstant inputs.

    Args:
        - outer (RationalFunction): Applied last.
        - inner (RationalFunction): Applied first; its variable names the result.

    Returns:
        - RationalFunction: The composition.

    Raises:
        - PoleError: If a constant inner value hits a pole of outer.
    """
    m = outer.degree
    p, q = inner.num, inner.den
    p_powers = [Poly.constant(1, inner.var)]
    q_powers = [Poly.constant(1, inner.var)]
    for _ in range(m):
        p_powers.append(p_powers[-1] * p)
        q_powers.append(q_powers[-1] * q)

    def homogenized(poly: Poly) -> Poly:
        total = Poly((), inner.var)
        for k, c in enumerate(poly.coeffs):
            total = total + p_powers[k] * q_powers[m - k] * c
        return total

    numerator, denominator = homogenized(outer.num), homogenized(outer.den)
    if denominator.is_zero():
        raise PoleError(f"{inner} hits a pole of {outer}")
    return RationalFunction(numerator, denominator)


def compare_rational(lhs: RationalFunction, rhs: RationalFunction) -> IdentityCheck:
    """Coefficient-exact comparison of two reduced rational functions."""
    check = compare_polys(lhs.num, rhs.num, "numerator ")
    if not check:
        return check
    return compare_polys(lhs.den, rhs.den, "denominator ")
