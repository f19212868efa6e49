"""Exact arithmetic in the fundamental and Schur bases.

Expansions are homogeneous formal integer combinations: FExpansion over
compositions, SchurExpansion over partitions. The change of basis from the
fundamental side back to Schur functions peels off the lexicographically
greatest support term, which for a symmetric input is always a partition;
subtracting that many standard-tableau expansions strictly lowers the
leading support, so the loop terminates within one pass per composition.
"""

import re
from functools import cache

from .errors import (
    DegreeMismatch, EmptyExpansion, InternalError, InvalidParameters, NotSymmetric,
)
from .tableaux import (
    Composition, Partition,
    check_composition, check_partition, composition_to_descent_set, is_partition,
    syt_descent_compositions,
)
from .decomposition import count_ssyt_formula


class _Expansion:
    """Shared container: terms maps index tuples to non-zero int coefficients."""

    def __init__(self, terms: dict):
        clean = {}
        degree = None
        for support, coeff in terms.items():
            support = self._check_support(support)
            coeff = int(coeff)
            if coeff == 0:
                continue
            if degree is None:
                degree = sum(support)
            elif sum(support) != degree:
                raise DegreeMismatch(
                    f"mixed degrees {degree} and {sum(support)} in one expansion")
            clean[support] = clean.get(support, 0) + coeff
        self.terms = {k: v for k, v in clean.items() if v}
        self.degree = degree

    @staticmethod
    def _check_support(support):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __repr__(self):
        return f"{type(self).__name__}({self.terms})"

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, 0) + v
        return type(self)(merged)

    def __sub__(self, other):
        merged = dict(self.terms)
        for k, v in other.terms.items():
            merged[k] = merged.get(k, 0) - v
        return type(self)(merged)

    def __rmul__(self, scalar: int):
        return type(self)({k: scalar * v for k, v in self.terms.items()})


class FExpansion(_Expansion):
    """Integer combination of fundamental basis elements indexed by compositions."""

    @staticmethod
    def _check_support(support):
        return check_composition(support)


class SchurExpansion(_Expansion):
    """Integer combination of Schur functions indexed by partitions."""

    @staticmethod
    def _check_support(support):
        return check_partition(support)


@cache
def _schur_to_f_terms(shape: Partition) -> tuple[tuple[Composition, int], ...]:
    census: dict[Composition, int] = {}
    for comp in syt_descent_compositions(shape):
        census[comp] = census.get(comp, 0) + 1
    return tuple(sorted(census.items()))


def schur_to_f(shape: Partition) -> FExpansion:
    """Expand one Schur function in the fundamental basis.

    The coefficient of a composition is the number of standard tableaux of
    the shape having it as descent composition.
    """
    return FExpansion(dict(_schur_to_f_terms(check_partition(shape))))


def schur_expansion_to_f(g: SchurExpansion) -> FExpansion:
    """Linear extension of schur_to_f."""
    out = FExpansion({})
    for shape, coeff in g.terms.items():
        out = out + coeff * schur_to_f(shape)
    return out


def f_to_monomials(alpha: Composition, n: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the monomials of one fundamental basis element.

    Monomials are indexed by weakly increasing sequences over 1..n with a
    strict rise at every boundary of alpha; empty when alpha has more parts
    than there are variables.
    """
    alpha = check_composition(alpha)
    m = sum(alpha)
    strict_after = set(composition_to_descent_set(alpha))
    out = []
    seq = [0] * m

    def extend(pos, low):
        if pos == m:
            exponents = [0] * n
            for v in seq:
                exponents[v - 1] += 1
            out.append(tuple(exponents))
            return
        for v in range(low, n + 1):
            seq[pos] = v
            extend(pos + 1, v + 1 if pos + 1 in strict_after else v)

    if len(alpha) <= n:
        extend(0, 1)
    return out


def leading_support(f: FExpansion) -> Composition:
    """Lexicographically greatest composition with a non-zero coefficient."""
    if not f.terms:
        raise EmptyExpansion("zero expansion has no leading support")
    return max(f.terms)


def schurify(f: FExpansion) -> SchurExpansion:
    """Rewrite a symmetric fundamental-basis combination in the Schur basis.

    Repeatedly: take the leading support (it must be a partition, otherwise
    the input was not symmetric), move that coefficient onto the Schur side,
    and subtract the corresponding standard-tableau expansion. Exact over the
    integers; the iteration cap is unreachable for homogeneous inputs.
    """
    result: dict[Partition, int] = {}
    work = f
    if work.degree is not None:
        cap = 2 ** (work.degree - 1) + 1
    else:
        cap = 1
    for _ in range(cap):
        if not work.terms:
            return SchurExpansion(result)
        alpha = leading_support(work)
        if not is_partition(alpha):
            raise NotSymmetric(
                f"leading support {alpha} is not a partition; "
                "the input is not a symmetric function")
        coeff = work.terms[alpha]
        result[alpha] = result.get(alpha, 0) + coeff
        work = work - coeff * schur_to_f(alpha)
    raise InternalError("leading-support elimination failed to terminate")


def is_schur_positive(f: FExpansion) -> bool:
    """True iff f is symmetric with only positive Schur coefficients."""
    try:
        expansion = schurify(f)
    except NotSymmetric:
        return False
    return all(c > 0 for c in expansion.terms.values())


def plethysm_monomial_count(mu: Partition, lam: Partition, n: int) -> int:
    """Monic monomial count of the plethysm of two Schur functions in n variables.

    Substituting the monic monomials of the inner function into the outer one
    gives as many monomials as tableaux of the outer shape over an alphabet
    of that size.
    """
    inner = count_ssyt_formula(check_partition(lam), n)
    if inner < 1:
        return 0
    return count_ssyt_formula(check_partition(mu), inner)


# ---------------------------------------------------------------------------
# text grammar: term ("+" term)*, term := [coeff "*"] BASIS "[" ints "]"

_TERM_RE = re.compile(r"^(?:(-?\d+)\*)?([Fs])\[(-?\d+(?:,-?\d+)*)\]$")


def _parse_terms(text: str, basis: str):
    compact = "".join(text.split())
    if not compact:
        raise InvalidParameters("empty expansion text")
    terms: dict[tuple, int] = {}
    for chunk in compact.split("+"):
        match = _TERM_RE.match(chunk)
        if not match:
            raise InvalidParameters(f"cannot parse term {chunk!r}")
        coeff, found_basis, parts = match.groups()
        if found_basis != basis:
            raise InvalidParameters(
                f"expected basis {basis!r}, found {found_basis!r} in {chunk!r}")
        support = tuple(int(p) for p in parts.split(","))
        terms[support] = terms.get(support, 0) + (int(coeff) if coeff else 1)
    return terms


def parse_f_expansion(text: str) -> FExpansion:
    """Parse e.g. '2*F[2,3,2] + F[4,3]' (whitespace-insensitive)."""
    return FExpansion(_parse_terms(text, "F"))


def parse_schur_expansion(text: str) -> SchurExpansion:
    """Parse e.g. 's[4,3] + 2*s[3,3,1]'."""
    return SchurExpansion(_parse_terms(text, "s"))


def _format_terms(terms: dict, basis: str) -> str:
    if not terms:
        return "0"
    chunks = []
    for support in sorted(terms, reverse=True):
        coeff = terms[support]
        body = f"{basis}[{','.join(str(p) for p in support)}]"
        chunks.append(body if coeff == 1 else f"{coeff}*{body}")
    return " + ".join(chunks)


def format_f_expansion(f: FExpansion) -> str:
    return _format_terms(f.terms, "F")


def format_schur_expansion(g: SchurExpansion) -> str:
    return _format_terms(g.terms, "s")
