"""Exact integer-coefficient polynomials and certified largest-root order.

Everything here runs on arbitrary-precision integers and rationals; no
floating point enters any decision.  The module provides

* :class:`IntPolynomial` arithmetic and exact evaluation,
* ``char_poly`` -- determinant expansion of xI - M for small integer
  matrices,
* the two parameterized cubics of the counterexample argument
  (``pendant_cubic`` and ``candidate_cubic``) whose largest roots are the
  squared spectral radii of the pendant-shift graph and of the one-vertex-
  added candidates,
* ``largest_real_root`` -- sign-variation isolation plus rational bisection
  down to a requested bracket width,
* ``diff_positive_on_positives`` / ``compare_largest_roots`` -- the
  coefficientwise certificate that orders two largest roots without ever
  computing them, with bracket refinement as the fallback.

Roots are always reported as brackets, never as floats; ties that survive
refinement to width 2^-60 are reported as unresolved instead of guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from operator import index as _int
from typing import Optional, Sequence

from .errors import (
    HypothesisError,
    PositivityUndecidedError,
    RootIsolationError,
    UnresolvedRootOrderError,
)

__all__ = [
    "IntPolynomial",
    "RootBracket",
    "PositivityCertificate",
    "RootComparison",
    "DEFAULT_BRACKET_WIDTH",
    "SEPARATION_LIMIT",
    "char_poly",
    "check_hypotheses",
    "pendant_cubic",
    "candidate_cubic",
    "diff_positive_on_positives",
    "largest_real_root",
    "compare_largest_roots",
]

DEFAULT_BRACKET_WIDTH = Fraction(1, 2**40)
SEPARATION_LIMIT = Fraction(1, 2**60)


class IntPolynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored in ascending degree order with the leading
    coefficient non-zero; the zero polynomial has an empty tuple.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[int]):
        coeffs = [_int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("IntPolynomial is immutable")

    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coefficients])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coefficients])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, x):
        """Exact Horner evaluation at an int or Fraction."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        v = self.evaluate(x)
        return (v > 0) - (v < 0)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def text(self) -> str:
        """Report form, e.g. ``x^3 - 15x^2 + 17x - 4``."""
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for d in range(self.degree(), -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = "x" if d == 1 else f"x^{d}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def coefficient_strings(self) -> tuple[str, ...]:
        """Decimal strings in ascending degree order, for machine output."""
        return tuple(str(c) for c in self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.text()})"


def char_poly(matrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - M) of a small integer matrix."""
    rows = [list(row) for row in (matrix.entries if hasattr(matrix, "entries") else matrix)]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    cells = [
        [
            IntPolynomial((-_int(rows[i][j]), 1)) if i == j else IntPolynomial((-_int(rows[i][j]),))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _poly_det(cells)


def _poly_det(cells: list[list[IntPolynomial]]) -> IntPolynomial:
    n = len(cells)
    if n == 1:
        return cells[0][0]
    total = IntPolynomial(())
    for j in range(n):
        if cells[0][j].is_zero():
            continue
        minor = [[cells[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = cells[0][j] * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# --------------------------------------------------------------------------
# The two parameterized cubics
# --------------------------------------------------------------------------

def check_hypotheses(p: int, q: int, k: int) -> None:
    """Validate the counterexample hypotheses p > 2, k >= 1 and q > kp+2."""
    p, q, k = _int(p), _int(q), _int(k)
    if k < 1:
        raise HypothesisError(f"requires k >= 1, got k={k}")
    if p <= 2:
        raise HypothesisError(f"requires p > 2, got p={p}")
    if q <= k * p + 2:
        raise HypothesisError(f"requires q > kp+2, got q={q} and kp+2={k * p + 2}")


def pendant_cubic(p: int, q: int, k: int) -> IntPolynomial:
    """Monic cubic whose largest root is the squared spectral radius of the
    pendant-shift graph on parts (p, q-k+1) with e = p(q-k) edges."""
    check_hypotheses(p, q, k)
    e = p * (q - k)
    return IntPolynomial(
        (-(p - 2) * (q - k - 1), (2 * q - 2 * k - 1) * (p - 1) - 1, -e, 1)
    )


def candidate_cubic(p: int, q: int, k: int, a: int) -> IntPolynomial:
    """Monic cubic (zero constant term) whose largest root is the squared
    spectral radius of the a-th one-vertex-added candidate graph."""
    check_hypotheses(p, q, k)
    a = _int(a)
    if a < 0 or a > k - 1:
        raise HypothesisError(f"requires 0 <= a <= k-1, got a={a} and k={k}")
    e = p * (q - k)
    return IntPolynomial((0, (k - a) * p * (p - 1) * (q - a - (k - a) * p), -e, 1))


# --------------------------------------------------------------------------
# Coefficientwise positivity certificate
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PositivityCertificate:
    """Exact coefficients of a difference f - g, certifying f > g on x > 0.

    ``positive`` is True exactly when every coefficient is >= 0 and at least
    one is > 0.  A difference with a negative coefficient never reaches this
    type; it raises PositivityUndecidedError instead.
    """

    difference: IntPolynomial
    positive: bool

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self.difference.coefficients


def diff_positive_on_positives(f: IntPolynomial, g: IntPolynomial) -> PositivityCertificate:
    """Certify f(x) > g(x) for all x > 0 by inspecting f - g coefficientwise."""
    difference = f - g
    if any(c < 0 for c in difference.coefficients):
        raise PositivityUndecidedError(
            f"difference {difference.text()} has a negative coefficient; "
            "coefficientwise positivity cannot decide the sign on x > 0"
        )
    return PositivityCertificate(difference, positive=not difference.is_zero())


# --------------------------------------------------------------------------
# Exact real-root isolation (sign variations + rational bisection)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RootBracket:
    """A rational bracket around one real root; lo == hi means an exact root."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError("bracket endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def to_dict(self) -> dict:
        return {"lo": str(self.lo), "hi": str(self.hi), "width": str(self.width)}


def _content(coeffs: Sequence[int]) -> int:
    c = 0
    for v in coeffs:
        c = gcd(c, abs(v))
    return c if c else 1


def _primitive(poly: IntPolynomial) -> IntPolynomial:
    if poly.is_zero():
        return poly
    c = _content(poly.coefficients)
    sign = -1 if poly.leading < 0 else 1
    return IntPolynomial([v * sign // c for v in poly.coefficients])


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder of a by b over the integers."""
    db = b.degree()
    lead = b.leading
    rem = a
    while not rem.is_zero() and rem.degree() >= db:
        shift = rem.degree() - db
        shifted = IntPolynomial([0] * shift + list(b.coefficients))
        rem = rem * lead - shifted * rem.leading
    return rem


def _poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    a, b = _primitive(a), _primitive(b)
    if a.degree() < b.degree():
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


def _squarefree_part(poly: IntPolynomial) -> IntPolynomial:
    """Primitive polynomial with the same real roots, all simple."""
    g = _poly_gcd(poly, poly.derivative())
    if g.degree() < 1:
        return _primitive(poly)
    # exact division over the rationals, then cleared back to a primitive poly
    num = [Fraction(c) for c in poly.coefficients]
    den = g.coefficients
    quot = [Fraction(0)] * (len(num) - len(den) + 1)
    for d in range(len(quot) - 1, -1, -1):
        coef = num[d + len(den) - 1] / den[-1]
        quot[d] = coef
        for i, c in enumerate(den):
            num[d + i] -= coef * c
    if any(v != 0 for v in num):
        raise ArithmeticError("gcd division left a remainder")  # pragma: no cover
    lcm_den = 1
    for v in quot:
        lcm_den = lcm_den * v.denominator // gcd(lcm_den, v.denominator)
    return _primitive(IntPolynomial([int(v * lcm_den) for v in quot]))


def _cauchy_bound(poly: IntPolynomial) -> Fraction:
    """Strict bound: every real root has magnitude below the returned value."""
    lead = abs(poly.leading)
    top = max((abs(c) for c in poly.coefficients[:-1]), default=0)
    return 1 + Fraction(top, lead)


def _lin_pow(u: Fraction, v: Fraction, k: int) -> list[Fraction]:
    """Coefficients of (u + v x)^k, ascending."""
    return [comb(k, j) * u ** (k - j) * v**j for j in range(k + 1)]


def _variations(poly: IntPolynomial, a: Fraction, b: Fraction) -> int:
    """Sign-variation bound on the number of roots in the open interval (a, b).

    Uses the Moebius transform x -> (a x + b) / (x + 1): roots of the input
    in (a, b) correspond to positive roots of the transformed polynomial,
    which Descartes' rule bounds from above with matching parity.
    """
    n = poly.degree()
    acc = [Fraction(0)] * (n + 1)
    for i, c in enumerate(poly.coefficients):
        if c == 0:
            continue
        left = _lin_pow(Fraction(b), Fraction(a), i)
        right = _lin_pow(Fraction(1), Fraction(1), n - i)
        for x, lv in enumerate(left):
            for y, rv in enumerate(right):
                acc[x + y] += c * lv * rv
    signs = [1 if v > 0 else -1 for v in acc if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _isolate_real_roots(poly: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """All real roots of a squarefree polynomial as sorted isolating intervals.

    Exact rational roots come back as degenerate (r, r) pairs.
    """
    bound = _cauchy_bound(poly)
    out: list[tuple[Fraction, Fraction]] = []
    _subdivide(poly, -bound, bound, out, 0)
    return out


def _subdivide(poly, a, b, out, depth) -> None:
    if depth > 200:  # pragma: no cover - unreachable for integer inputs
        raise RootIsolationError("root isolation did not terminate")
    v = _variations(poly, a, b)
    if v == 0:
        return
    if v == 1:
        out.append((a, b))
        return
    mid = (a + b) / 2
    _subdivide(poly, a, mid, out, depth + 1)
    if poly.evaluate(mid) == 0:
        out.append((mid, mid))
    _subdivide(poly, mid, b, out, depth + 1)


def _refine(poly: IntPolynomial, lo: Fraction, hi: Fraction, width: Fraction):
    """Shrink an isolating interval of a squarefree poly below ``width``.

    The interval may carry other exact roots on its endpoints; those are
    stepped off with parity checks before plain sign bisection takes over.
    """
    if lo == hi:
        return lo, hi
    while poly.sign_at(lo) == 0:
        probe = lo + (hi - lo) / 4
        if poly.evaluate(probe) == 0:
            return probe, probe
        if _variations(poly, probe, hi) % 2 == 1:
            lo = probe
        else:
            hi = probe
    while poly.sign_at(hi) == 0:
        probe = hi - (hi - lo) / 4
        if poly.evaluate(probe) == 0:
            return probe, probe
        if _variations(poly, lo, probe) % 2 == 1:
            hi = probe
        else:
            lo = probe
    sign_lo = poly.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = poly.sign_at(mid)
        if s == 0:
            return mid, mid
        if s == sign_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_real_root(
    poly: IntPolynomial, width: Fraction = DEFAULT_BRACKET_WIDTH
) -> RootBracket:
    """Bracket the largest real root using exact sign arithmetic only.

    The returned bracket either collapses onto an exact rational root or
    carries a strict sign change of ``poly``.  Raises RootIsolationError when
    no real root exists below the Cauchy bound, or when the largest real root
    has even multiplicity so that no sign change can witness it.
    """
    if poly.is_zero() or poly.degree() < 1:
        raise ValueError("need a non-constant polynomial")
    if poly.leading < 0:
        raise ValueError("leading coefficient must be positive")
    squarefree = _squarefree_part(poly)
    roots = _isolate_real_roots(squarefree)
    if not roots:
        raise RootIsolationError(
            f"{poly.text()} has no real root below the Cauchy bound"
        )
    lo, hi = _refine(squarefree, *roots[-1], width)
    if lo == hi:
        return RootBracket(lo, hi)
    if poly.sign_at(lo) * poly.sign_at(hi) >= 0:
        raise RootIsolationError(
            f"largest real root of {poly.text()} has even multiplicity; "
            "no sign-change bracket exists"
        )
    return RootBracket(lo, hi)


# --------------------------------------------------------------------------
# Largest-root comparison
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RootComparison:
    """Ordering between the largest real roots of two polynomials.

    order is "<", ">" or "=" for the left root against the right root;
    method records how the ordering was decided.
    """

    order: str
    method: str
    certificate: Optional[PositivityCertificate] = None
    left_bracket: Optional[RootBracket] = None
    right_bracket: Optional[RootBracket] = None


def compare_largest_roots(
    left: IntPolynomial,
    right: IntPolynomial,
    separation_limit: Fraction = SEPARATION_LIMIT,
) -> RootComparison:
    """Order the largest real roots of two polynomials, exactly.

    Preferred route: a coefficientwise-positive difference.  If left - right
    is positive on x > 0 and the right root is positive, every root of the
    left polynomial lies strictly below the right root.  When neither
    direction certifies, both roots are bracketed and refined until the
    brackets separate; overlap persisting at width ``separation_limit``
    raises UnresolvedRootOrderError.
    """
    if left == right:
        return RootComparison("=", "identical")
    for f, g, order in ((left, right, "<"), (right, left, ">")):
        try:
            cert = diff_positive_on_positives(f, g)
        except PositivityUndecidedError:
            continue
        # g(0) < 0 with positive leading coefficient forces the largest root
        # of g above zero, where the certificate applies
        if cert.positive and g.evaluate(0) < 0:
            return RootComparison(order, "certificate", certificate=cert)

    states = []
    for poly in (left, right):
        squarefree = _squarefree_part(poly)
        roots = _isolate_real_roots(squarefree)
        if not roots:
            raise RootIsolationError(f"{poly.text()} has no real root")
        lo, hi = _refine(squarefree, *roots[-1], DEFAULT_BRACKET_WIDTH)
        states.append([squarefree, lo, hi])
    (lsf, llo, lhi), (rsf, rlo, rhi) = states
    while True:
        lb = RootBracket(llo, lhi)
        rb = RootBracket(rlo, rhi)
        if lb.is_exact and rb.is_exact:
            order = "=" if lb.lo == rb.lo else ("<" if lb.lo < rb.lo else ">")
            return RootComparison(order, "bracket", left_bracket=lb, right_bracket=rb)
        if lb.is_exact and rlo <= lb.lo <= rhi and right.evaluate(lb.lo) == 0:
            return RootComparison("=", "bracket", left_bracket=lb, right_bracket=rb)
        if rb.is_exact and llo <= rb.lo <= lhi and left.evaluate(rb.lo) == 0:
            return RootComparison("=", "bracket", left_bracket=lb, right_bracket=rb)
        if lhi < rlo:
            return RootComparison("<", "bracket", left_bracket=lb, right_bracket=rb)
        if rhi < llo:
            return RootComparison(">", "bracket", left_bracket=lb, right_bracket=rb)
        if lb.width <= separation_limit and rb.width <= separation_limit:
            raise UnresolvedRootOrderError(
                f"largest roots of {left.text()} and {right.text()} not separated "
                f"at bracket width {separation_limit}"
            )
        if lhi > llo:
            llo, lhi = _refine(lsf, llo, lhi, (lhi - llo) / 2)
        if rhi > rlo:
            rlo, rhi = _refine(rsf, rlo, rhi, (rhi - rlo) / 2)
