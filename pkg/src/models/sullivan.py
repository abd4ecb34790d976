"""Free graded-commutative algebra on x1, x2, y1, y2, y3, w1..wn and its differential

    |x1| = 8, |x2| = 10, |y1| = 33, |y2| = 35, |y3| = 37, |wj| = 40, |zj| = 119

    d(y1) = x1^3 x2,  d(y2) = x1^2 x2^2,  d(y3) = x1 x2^3,  d(x) = d(w) = 0

The z generators are formal: d(z_j) is produced by d_z() but z's never
enter a product.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from .encoder import group_cycle_data, pair_terms
from .errors import ScaleLimitError
from .group import Group

DEFAULT_DEGREE_LIMIT = 200
MAX_W_GENERATORS = 8
Z_DEGREE = 119


class Gen(NamedTuple):
    name: str
    deg: int


X1 = Gen('x1', 8)
X2 = Gen('x2', 10)
Y_GENS = (Gen('y1', 33), Gen('y2', 35), Gen('y3', 37))
W_DEGREE = 40


@dataclass(frozen=True)
class GeneratorSet:
    """Generators x1, x2, y1, y2, y3, w1..wn with their degrees"""
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Number of w generators must be non-negative")

    def generators(self) -> List[Gen]:
        return [X1, X2, *Y_GENS] + [Gen(f"w{j}", W_DEGREE) for j in range(1, self.n + 1)]

    def degree(self, name: str) -> int:
        if name.startswith('z'):
            return Z_DEGREE
        for gen in self.generators():
            if gen.name == name:
                return gen.deg
        raise KeyError(name)

    @staticmethod
    def is_odd(gen: Gen) -> bool:
        return gen.deg % 2 == 1


@dataclass(frozen=True, order=True)
class Monomial:
    """
    x1^a x2^b y1^e1 y2^e2 y3^e3 w1^c1 ... wn^cn (odd exponents are 0 or 1)

    Odd generators are stored in the order y1 y2 y3; the sign of any other
    arrangement is applied when monomials are multiplied.
    """
    a: int = 0
    b: int = 0
    e1: int = 0
    e2: int = 0
    e3: int = 0
    w: Tuple[int, ...] = ()

    def __post_init__(self):
        if min((self.a, self.b) + tuple(self.w)) < 0:
            raise ValueError("Exponents must be non-negative")
        if any(e not in (0, 1) for e in (self.e1, self.e2, self.e3)):
            raise ValueError("Odd generators have exponent 0 or 1")

    @classmethod
    def of(cls, n: int, a: int = 0, b: int = 0, ys: Iterable[int] = (), w: Optional[Dict[int, int]] = None) -> 'Monomial':
        """
        Convenience constructor

        Args:
            n: Number of w generators
            a, b: Exponents of x1, x2
            ys: Indices (1..3) of the y factors
            w: Map j -> exponent of w_j
        """
        ys = set(ys)
        exps = [0] * n
        for j, c in (w or {}).items():
            exps[j - 1] = c
        return cls(a, b, int(1 in ys), int(2 in ys), int(3 in ys), tuple(exps))

    @property
    def ys(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate((self.e1, self.e2, self.e3), start=1) if e)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return (self.a, self.b, self.e1, self.e2, self.e3) + self.w

    @property
    def degree(self) -> int:
        return (8 * self.a + 10 * self.b + 33 * self.e1 + 35 * self.e2 + 37 * self.e3
                + W_DEGREE * sum(self.w))

    def with_ys(self, ys: Iterable[int]) -> 'Monomial':
        ys = set(ys)
        return Monomial(self.a, self.b, int(1 in ys), int(2 in ys), int(3 in ys), self.w)

    def text(self) -> str:
        parts = []
        for name, exp in (('x1', self.a), ('x2', self.b)):
            if exp:
                parts.append(name if exp == 1 else f"{name}^{exp}")
        parts += [f"y{i}" for i in self.ys]
        for j, exp in enumerate(self.w, start=1):
            if exp:
                parts.append(f"w{j}" if exp == 1 else f"w{j}^{exp}")
        return ' '.join(parts) or '1'


def multiply_monomials(m1: Monomial, m2: Monomial) -> Tuple[int, Optional[Monomial]]:
    """
    Product in the graded-commutative algebra

    Returns:
        (sign, monomial), or (0, None) when an odd generator repeats
    """
    ys1, ys2 = m1.ys, m2.ys
    if set(ys1) & set(ys2):
        return 0, None
    inversions = sum(1 for i in ys1 for j in ys2 if i > j)
    width = max(len(m1.w), len(m2.w))
    w1 = m1.w + (0,) * (width - len(m1.w))
    w2 = m2.w + (0,) * (width - len(m2.w))
    merged = Monomial(
        m1.a + m2.a, m1.b + m2.b, 0, 0, 0, tuple(u + v for u, v in zip(w1, w2))
    ).with_ys(ys1 + ys2)
    return (-1) ** inversions, merged


Scalar = Union[int, Fraction]


class Polynomial:
    """Finite sum of monomials with nonzero rational coefficients"""

    __slots__ = ('terms',)

    def __init__(self, terms: Optional[Dict[Monomial, Scalar]] = None):
        self.terms: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                self.terms[mono] = Fraction(coeff)

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> 'Polynomial':
        return cls({mono: coeff})

    @classmethod
    def zero(cls) -> 'Polynomial':
        return cls()

    def __add__(self, other: 'Polynomial') -> 'Polynomial':
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return Polynomial(terms)

    def __neg__(self) -> 'Polynomial':
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: 'Polynomial') -> 'Polynomial':
        return self + (-other)

    def scale(self, factor: Scalar) -> 'Polynomial':
        return Polynomial({m: factor * c for m, c in self.terms.items()})

    def __mul__(self, other: 'Polynomial') -> 'Polynomial':
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, mono = multiply_monomials(m1, m2)
                if sign:
                    terms[mono] = terms.get(mono, Fraction(0)) + sign * c1 * c2
        return Polynomial(terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({m.degree for m in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Degree of a homogeneous polynomial (None for zero)"""
        degrees = self.degrees()
        if len(degrees) > 1:
            raise ValueError(f"Polynomial is not homogeneous: degrees {degrees}")
        return degrees[0] if degrees else None

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]))

    def text(self) -> str:
        """Terms as 'q * x1^a x2^b y1 y2 y3 w<j>^c' in monomial order"""
        if not self.terms:
            return '0'
        return ' + '.join(f"{_format_coeff(c)} * {m.text()}" for m, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"Polynomial({self.text()})"


def _format_coeff(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def monomial_key(mono: Monomial) -> Tuple:
    """Graded-lex: degree, then exponent vector (a, b, e1, e2, e3, c1..cn) descending"""
    return (mono.degree, tuple(-e for e in mono.exponents))


# Generators and the differential

def x1(n: int, power: int = 1) -> Polynomial:
    return Polynomial.monomial(Monomial.of(n, a=power))


def x2(n: int, power: int = 1) -> Polynomial:
    return Polynomial.monomial(Monomial.of(n, b=power))


def y(n: int, i: int) -> Polynomial:
    return Polynomial.monomial(Monomial.of(n, ys=(i,)))


def w(n: int, j: int, power: int = 1) -> Polynomial:
    return Polynomial.monomial(Monomial.of(n, w={j: power}))


def dy(n: int, i: int) -> Polynomial:
    """d(y1) = x1^3 x2, d(y2) = x1^2 x2^2, d(y3) = x1 x2^3"""
    return Polynomial.monomial(Monomial.of(n, a=4 - i, b=i))


def _differential_monomial(mono: Monomial) -> Polynomial:
    # d(E y_i1 ... y_ik) = E * sum_r (-1)^(r-1) y_i1 .. d(y_ir) .. y_ik
    ys = mono.ys
    if not ys:
        return Polynomial.zero()
    n = len(mono.w)
    even = Polynomial.monomial(mono.with_ys(()))
    result = Polynomial.zero()
    for r, i in enumerate(ys):
        rest = Polynomial.monomial(Monomial.of(n, ys=ys[:r] + ys[r + 1:]))
        result = result + (even * dy(n, i) * rest).scale((-1) ** r)
    return result


def differential(poly: Polynomial) -> Polynomial:
    """
    Graded Leibniz extension of d

    Args:
        poly: Homogeneous polynomial

    Returns:
        d(poly), homogeneous of degree |poly| + 1 (or zero)
    """
    result = Polynomial.zero()
    for mono, coeff in poly.terms.items():
        result = result + _differential_monomial(mono).scale(coeff)
    return result


def y_term(n: int) -> Polynomial:
    """y1 y2 x1^4 x2^2 - y1 y3 x1^5 x2 + y2 y3 x1^6"""
    return Polynomial({
        Monomial.of(n, a=4, b=2, ys=(1, 2)): 1,
        Monomial.of(n, a=5, b=1, ys=(1, 3)): -1,
        Monomial.of(n, a=6, ys=(2, 3)): 1,
    })


def cube(n: int, j: int) -> Polynomial:
    return w(n, j, 3)


def pair_term(n: int, i: int, j: int) -> Polynomial:
    """w_i w_j x2^4, or w_i^2 x2^4 when i == j"""
    exps = {i: 2} if i == j else {i: 1, j: 1}
    return Polynomial.monomial(Monomial.of(n, b=4, w=exps))


def d_z(j: int, group: Group) -> Polynomial:
    """
    d(z_j) = w_j^3 + sum of w_j w_t x2^4 over the pair terms + Y-term + x1^15

    Args:
        j: Column index 1..n
        group: Valid group

    Returns:
        Homogeneous polynomial of degree 120
    """
    n = group.n
    data = group_cycle_data(group)
    result = cube(n, j)
    for a, b in pair_terms(group, j, data):
        result = result + pair_term(n, a, b)
    result = result + y_term(n) + x1(n, 15)
    if result.degree != Z_DEGREE + 1:
        raise ValueError(f"d(z_{j}) has degree {result.degree}, expected {Z_DEGREE + 1}")
    return result


def substitute_w(poly: Polynomial, images: Tuple[int, ...]) -> Polynomial:
    """Algebra map w_j -> w_images[j-1], identity on x's and y's"""
    terms: Dict[Monomial, Fraction] = {}
    for mono, coeff in poly.terms.items():
        exps = [0] * len(mono.w)
        for j, c in enumerate(mono.w, start=1):
            exps[images[j - 1] - 1] += c
        image = Monomial(mono.a, mono.b, mono.e1, mono.e2, mono.e3, tuple(exps))
        terms[image] = terms.get(image, Fraction(0)) + coeff
    return Polynomial(terms)


# Monomial bases

def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def monomial_basis(degree: int, n: int, degree_limit: int = DEFAULT_DEGREE_LIMIT) -> List[Monomial]:
    """
    All monomials of exact degree in x1, x2, y1..y3, w1..wn

    Args:
        degree: Target degree
        n: Number of w generators
        degree_limit: Largest degree accepted

    Returns:
        Monomials in graded-lex order (see monomial_key)

    Raises:
        ScaleLimitError: If degree or n exceed the desk-scale bounds
    """
    if degree > degree_limit:
        raise ScaleLimitError(f"Degree {degree} exceeds the limit {degree_limit}")
    if n > MAX_W_GENERATORS:
        raise ScaleLimitError(f"At most {MAX_W_GENERATORS} w generators are supported, got {n}")
    if degree < 0:
        return []
    result = []
    for e1, e2, e3 in product((0, 1), repeat=3):
        odd = 33 * e1 + 35 * e2 + 37 * e3
        for s in range((degree - odd) // W_DEGREE + 1 if degree >= odd else 0):
            remaining = degree - odd - W_DEGREE * s
            for b in range(remaining // 10 + 1):
                rest = remaining - 10 * b
                if rest % 8:
                    continue
                a = rest // 8
                for ws in _compositions(s, n):
                    result.append(Monomial(a, b, e1, e2, e3, ws))
    return sorted(result, key=monomial_key)


def to_vector(poly: Polynomial, basis: List[Monomial]) -> List[Fraction]:
    """Coordinates in a monomial basis"""
    index = {m: i for i, m in enumerate(basis)}
    vector = [Fraction(0)] * len(basis)
    for mono, coeff in poly.terms.items():
        if mono not in index:
            raise ValueError(f"Monomial {mono.text()} is not in the basis")
        vector[index[mono]] = coeff
    return vector


def from_vector(vector: Iterable[Fraction], basis: List[Monomial]) -> Polynomial:
    return Polynomial(dict(zip(basis, vector)))
