"""Catalog of named ns operads with presentations and certificates.

Every operad the package works with is available here by name, as a
finite presentation together with the monomial order under which its
relations are (or complete to) a Groebner basis and a closed-form
dimension table.  The module also hosts the structural cross-checks
that tie the catalog together:

- ``expand_lambda`` embeds the degree-one gravity generators into the
  two-generator operad ncGerst as sums of comb monomials;
- ``d1_h1_check`` verifies that the derivation pair D1/H1 of ncGerst is
  a square-zero differential with an explicit contracting homotopy, and
  that its kernel is exactly the lambda-generated subspace;
- ``certify_dimensions`` checks Groebner, brute-force, and closed-form
  dimension tables against each other, failing hard on the first
  discrepancy;
- ``hypercom_functional_equation`` plugs the computed two-variable
  dimension series of ncHyperCom into its algebraic functional
  equation;
- ``ncbv_presentations_check`` compares the three-generator and
  two-generator presentations of ncBV and certifies that the derived
  bracket satisfies the ncGerst relations.

Truncated families (ncGrav, ncHyperCom) carry one generator per arity
up to ``max_arity`` and all relations of arity at most ``max_arity``,
which is exactly what dimension computations in that range need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Optional

from .free_operad import (
    Generator,
    MonomialOrder,
    OperadElement,
    TreeMonomial,
    parse_element,
    substitute,
)
from .groebner import (
    GroebnerBasis,
    IdealSlice,
    Presentation,
    complete,
    enumerate_monomials,
    hilbert,
    normal_monomials,
    reduce,
)
from .linalg import Subspace, nullspace, rank

DimTable = dict[int, int]


class DimensionMismatch(ValueError):
    """Raised when two dimension oracles disagree on a graded component."""


# -- presentations ------------------------------------------------------------


def _gens(*spec: tuple[str, int, int]) -> tuple[Generator, ...]:
    return tuple(Generator(name, arity, degree) for name, arity, degree in spec)


def _presentation_as() -> Presentation:
    gens = _gens(("m", 2, 0))
    rel = parse_element("m(m(1,2),3) - m(1,m(2,3))", gens)
    return Presentation(gens, (rel,), name="As")


def _presentation_as_m(basis: tuple[tuple[str, int], ...]) -> Presentation:
    gens = _gens(*((name, 2, degree) for name, degree in basis))
    elems = {g.name: OperadElement.from_generator(g) for g in gens}
    rels = []
    for x, y in product(gens, repeat=2):
        sign = -1 if (x.degree * y.degree) % 2 else 1
        rels.append(
            elems[x.name].compose(1, elems[y.name])
            - elems[y.name].compose(2, elems[x.name]) * sign
        )
    return Presentation(gens, tuple(rels), name="As_M")


_NCGERST_RELATIONS = (
    "m(m(1,2),3) - m(1,m(2,3))",
    "m(b(1,2),3) - b(1,m(2,3))",
    "b(m(1,2),3) - m(1,b(2,3))",
    "b(b(1,2),3) + b(1,b(2,3))",
)


def _presentation_ncgerst() -> Presentation:
    gens = _gens(("m", 2, 0), ("b", 2, 1))
    rels = tuple(parse_element(t, gens) for t in _NCGERST_RELATIONS)
    return Presentation(gens, rels, name="ncGerst")


def _presentation_ncbv3gen() -> Presentation:
    gens = _gens(("m", 2, 0), ("b", 2, 1), ("delta", 1, 1))
    texts = ("delta(delta(1))",) + _NCGERST_RELATIONS + (
        "delta(m(1,2)) - m(delta(1),2) - m(1,delta(2)) - b(1,2)",
        "delta(b(1,2)) + b(delta(1),2) + b(1,delta(2))",
    )
    rels = tuple(parse_element(t, gens) for t in texts)
    return Presentation(gens, rels, name="ncBV3gen")


def _presentation_qncbv() -> Presentation:
    gens = _gens(("m", 2, 0), ("b", 2, 1), ("delta", 1, 1))
    texts = ("delta(delta(1))",) + _NCGERST_RELATIONS + (
        "delta(m(1,2)) - m(delta(1),2) - m(1,delta(2))",
        "delta(b(1,2)) + b(delta(1),2) + b(1,delta(2))",
    )
    rels = tuple(parse_element(t, gens) for t in texts)
    return Presentation(gens, rels, name="qncBV")


def _presentation_ncbv2gen() -> Presentation:
    gens = _gens(("m", 2, 0), ("delta", 1, 1))
    texts = (
        "delta(delta(1))",
        "m(m(1,2),3) - m(1,m(2,3))",
        "delta(m(1,m(2,3))) - m(delta(m(1,2)),3)"
        " - m(1,delta(m(2,3))) + m(1,m(delta(2),3))",
    )
    rels = tuple(parse_element(t, gens) for t in texts)
    return Presentation(gens, rels, name="ncBV2gen")


def _presentation_ncgrav(max_arity: int) -> Presentation:
    gens = {k: Generator(f"l{k}", k, 1) for k in range(2, max_arity + 1)}
    elems = {k: OperadElement.from_generator(g) for k, g in gens.items()}
    rels = []
    for n in range(3, max_arity + 1):
        total = OperadElement.zero()
        for j in range(1, n):
            total = total + elems[n - 1].compose(j, elems[2])
        rels.append(total)
        for k in range(3, n):
            for r in range(1, n - k + 2):
                window = OperadElement.zero()
                for j in range(r, r + k - 1):
                    window = window + elems[n - 1].compose(j, elems[2])
                rels.append(window - elems[n - k + 1].compose(r, elems[k]))
    alphabet = tuple(gens[k] for k in sorted(gens))
    return Presentation(alphabet, tuple(rels), name="ncGrav")


def _presentation_nchypercom(max_arity: int) -> Presentation:
    gens = {k: Generator(f"nu{k}", k, 2 * k - 4) for k in range(2, max_arity + 1)}
    elems = {k: OperadElement.from_generator(g) for k, g in gens.items()}
    rels = []
    for n in range(3, max_arity + 1):
        for i in range(2, n):
            total = OperadElement.zero()
            for j in range(2, i + 1):
                total = total + elems[n - j + 1].compose(i - j + 1, elems[j])
            for k in range(2, n - i + 2):
                total = total - elems[n - k + 1].compose(i, elems[k])
            rels.append(total)
    alphabet = tuple(gens[k] for k in sorted(gens))
    return Presentation(alphabet, tuple(rels), name="ncHyperCom")


def _presentation_tas(k: int) -> Presentation:
    (a,) = _gens(("a", k, 0))
    x = OperadElement.from_generator(a)
    rels = tuple(x.compose(i, x) - x.compose(k, x) for i in range(1, k))
    return Presentation((a,), rels, name=f"tAs{k}")


def _presentation_pas(k: int) -> Presentation:
    (a,) = _gens(("a", k, k - 2))
    x = OperadElement.from_generator(a)
    total = OperadElement.zero()
    for i in range(1, k + 1):
        sign = -1 if ((k - 1) * (i - 1)) % 2 else 1
        total = total + x.compose(i, x) * sign
    return Presentation((a,), (total,), name=f"pAs{k}")


def _presentation_2ncgerst() -> Presentation:
    gens = _gens(("m", 2, 0), ("c", 3, 1))
    texts = (
        "m(m(1,2),3) - m(1,m(2,3))",
        "c(m(1,2),3,4) - m(1,c(2,3,4))",
        "c(1,m(2,3),4)",
        "c(1,2,m(3,4)) - m(c(1,2,3),4)",
        "c(c(1,2,3),4,5) + c(1,c(2,3,4),5) + c(1,2,c(3,4,5))",
    )
    rels = tuple(parse_element(t, gens) for t in texts)
    return Presentation(gens, rels, name="2ncGerst")


def _presentation_d() -> Presentation:
    gens = _gens(("delta", 1, 1))
    return Presentation(gens, (parse_element("delta(delta(1))", gens),), name="D")


# -- closed-form dimension tables ---------------------------------------------


def _dims_one_dimensional(n: int) -> DimTable:
    return {0: 1}


def _dims_as_m(basis: tuple[tuple[str, int], ...]) -> Callable[[int], DimTable]:
    degrees = [degree for _, degree in basis]

    def dims(n: int) -> DimTable:
        table = {0: 1}
        for _ in range(n - 1):
            convolved: DimTable = {}
            for d, c in table.items():
                for e in degrees:
                    convolved[d + e] = convolved.get(d + e, 0) + c
            table = convolved
        return table

    return dims


def _dims_ncgerst(n: int) -> DimTable:
    if n == 1:
        return {0: 1}
    return {k: comb(n - 1, k) for k in range(n)}


def _dims_ncbv(n: int) -> DimTable:
    return {d: comb(2 * n - 1, d) for d in range(2 * n)}


def _dims_ncgrav(n: int) -> DimTable:
    if n == 1:
        return {0: 1}
    return {d: comb(n - 2, d - 1) for d in range(1, n)}


def narayana(n: int, k: int) -> int:
    """The refined Catalan count (1/(n-1)) C(n-1,k) C(n-1,k+1)."""
    if n < 2:
        return 1 if n == 1 and k == 0 else 0
    value = comb(n - 1, k) * comb(n - 1, k + 1)
    assert value % (n - 1) == 0
    return value // (n - 1)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _dims_nchypercom(n: int) -> DimTable:
    if n == 1:
        return {0: 1}
    return {2 * k: narayana(n, k) for k in range(n - 1) if narayana(n, k)}


def _dims_tas(k: int) -> Callable[[int], DimTable]:
    def dims(n: int) -> DimTable:
        return {0: 1} if (n - 1) % (k - 1) == 0 else {}

    return dims


def _dims_pas3(n: int) -> DimTable:
    if n % 2 == 0:
        return {}
    j = (n - 1) // 2
    return {j: catalan(j)}


def real_betti(n: int) -> DimTable:
    """Rational Betti numbers of the real points of the brick manifold."""
    if n == 1:
        return {0: 1}
    table = {0: 1}
    for i in range(1, (n - 1) // 2 + 1):
        value = comb(n - 1, i) - comb(n - 1, i - 1)
        if value:
            table[i] = value
    return table


def euler_characteristic_real(n: int) -> int:
    """Alternating sum of the real Betti numbers, in closed form."""
    if n % 2 == 1:
        return 0
    half = n // 2 - 1
    return (-1) ** half * catalan(half)


def _dims_d(n: int) -> DimTable:
    return {0: 1, 1: 1} if n == 1 else {}


# -- orders and the catalog ----------------------------------------------------


def _order_pathlex(*names: str) -> MonomialOrder:
    return MonomialOrder(tuple(names), "path-lex")


def _order_weighted(prefix: str, max_arity: int, reverse: bool) -> MonomialOrder:
    names = tuple(f"{prefix}{k}" for k in range(2, max_arity + 1))
    weights = tuple((name, 0 if name == f"{prefix}2" else 1) for name in names)
    return MonomialOrder(names, "weight-first-path-lex", weights, reverse)


@dataclass(frozen=True)
class NamedOperad:
    """A cataloged operad: presentation, expected dimensions, order."""

    name: str
    presentation: Presentation
    expected_dims: Optional[Callable[[int], DimTable]]
    preferred_order: MonomialOrder
    groebner_claimed: bool = True


ZOO_NAMES = (
    "As",
    "As_M",
    "ncGerst",
    "ncBV3gen",
    "ncBV2gen",
    "qncBV",
    "ncGrav",
    "ncHyperCom",
    "tAs",
    "pAs",
    "2ncGerst",
    "D",
)

DEFAULT_AS_M_BASIS = (("m", 0), ("b", 1))


def _split_name(name: str) -> tuple[str, Optional[int]]:
    base = name.strip()
    if base.startswith(("tAs", "pAs")) and len(base) > 3:
        suffix = base[3:].strip("()")
        if suffix.isdigit():
            return base[:3], int(suffix)
    return base, None


def named_operad(
    name: str,
    k: Optional[int] = None,
    basis: Optional[tuple[tuple[str, int], ...]] = None,
    max_arity: int = 7,
) -> NamedOperad:
    """Look up a cataloged operad; tAs/pAs accept an arity parameter."""
    base, embedded = _split_name(name)
    if embedded is not None:
        if k is not None and k != embedded:
            raise ValueError(f"conflicting arity parameters for {name!r}")
        k = embedded
    if base == "As":
        return NamedOperad("As", _presentation_as(), _dims_one_dimensional,
                           _order_pathlex("m"))
    if base == "As_M":
        basis = tuple(basis) if basis is not None else DEFAULT_AS_M_BASIS
        names = tuple(reversed([n for n, _ in basis]))
        return NamedOperad("As_M", _presentation_as_m(basis), _dims_as_m(basis),
                           _order_pathlex(*names))
    if base == "ncGerst":
        return NamedOperad("ncGerst", _presentation_ncgerst(), _dims_ncgerst,
                           _order_pathlex("b", "m"))
    if base == "ncBV3gen":
        return NamedOperad("ncBV3gen", _presentation_ncbv3gen(), _dims_ncbv,
                           _order_pathlex("delta", "b", "m"),
                           groebner_claimed=False)
    if base == "ncBV2gen":
        return NamedOperad("ncBV2gen", _presentation_ncbv2gen(), _dims_ncbv,
                           _order_pathlex("delta", "m"),
                           groebner_claimed=False)
    if base == "qncBV":
        return NamedOperad("qncBV", _presentation_qncbv(), _dims_ncbv,
                           _order_pathlex("delta", "b", "m"))
    if base == "ncGrav":
        return NamedOperad("ncGrav", _presentation_ncgrav(max_arity),
                           _dims_ncgrav, _order_weighted("l", max_arity, False))
    if base == "ncHyperCom":
        return NamedOperad("ncHyperCom", _presentation_nchypercom(max_arity),
                           _dims_nchypercom,
                           _order_weighted("nu", max_arity, True))
    if base == "tAs":
        k = 3 if k is None else k
        return NamedOperad(f"tAs{k}", _presentation_tas(k), _dims_tas(k),
                           _order_pathlex("a"))
    if base == "pAs":
        k = 3 if k is None else k
        return NamedOperad(f"pAs{k}", _presentation_pas(k),
                           _dims_pas3 if k == 3 else None, _order_pathlex("a"))
    if base == "2ncGerst":
        return NamedOperad("2ncGerst", _presentation_2ncgerst(), real_betti,
                           _order_pathlex("c", "m"))
    if base == "D":
        return NamedOperad("D", _presentation_d(), _dims_d,
                           _order_pathlex("delta"))
    raise KeyError(f"unknown operad name {name!r}; known: {', '.join(ZOO_NAMES)}")


def presentation_of(
    name: str,
    k: Optional[int] = None,
    basis: Optional[tuple[tuple[str, int], ...]] = None,
    max_arity: int = 7,
) -> Presentation:
    """The exact defining relations of a cataloged operad."""
    return named_operad(name, k=k, basis=basis, max_arity=max_arity).presentation


def zoo_catalog(max_arity: int = 7) -> list[NamedOperad]:
    return [named_operad(name, max_arity=max_arity) for name in ZOO_NAMES]


# -- lambda expansion ----------------------------------------------------------


def expand_lambda(k: int) -> OperadElement:
    """The arity-k degree-one comb sum inside the free operad on m and b.

    lambda_2 is b itself; for k > 2 the element is the sum over i of the
    right comb of k-2 products with b grafted into input i, giving k-1
    monomials of degree one.
    """
    if k < 2:
        raise ValueError("lambda generators start at arity 2")
    m = Generator("m", 2, 0)
    b = Generator("b", 2, 1)
    b_el = OperadElement.from_generator(b)
    if k == 2:
        return b_el
    comb_el = OperadElement.from_generator(m)
    for _ in range(k - 3):
        comb_el = comb_el.compose(2, OperadElement.from_generator(m))
    total = OperadElement.zero()
    for i in range(1, k):
        total = total + comb_el.compose(i, b_el)
    return total


def _lambda_images(max_arity: int) -> dict[str, OperadElement]:
    return {f"l{k}": expand_lambda(k) for k in range(2, max_arity + 1)}


def lambda_relations_check(max_arity: int = 6) -> dict:
    """Reduce every ncGrav relation, written in the expanded lambdas,
    against the Groebner basis of ncGerst; all must vanish."""
    gerst = named_operad("ncGerst")
    gb = complete(gerst.presentation, gerst.preferred_order, max_arity)
    grav = presentation_of("ncGrav", max_arity=max_arity)
    images = _lambda_images(max_arity)
    failures = []
    for rel in grav.relations:
        if not reduce(substitute(rel, images), gb).is_zero():
            failures.append(rel.to_text())
    return {
        "max_arity": max_arity,
        "relations_checked": len(grav.relations),
        "all_reduce_to_zero": not failures,
        "failures": failures,
    }


# -- the derivation pair on ncGerst --------------------------------------------


def _derivation_matrix(
    gb: GroebnerBasis,
    basis: list[TreeMonomial],
    images: dict[str, Optional[Generator]],
    op_degree: int,
) -> list[list[Fraction]]:
    index = {mono: j for j, mono in enumerate(basis)}
    rows = []
    for mono in basis:
        out = OperadElement.zero()
        acc = 0
        for path, g in mono.vertices_preorder():
            target = images.get(g.name)
            if target is not None:
                sign = -1 if (op_degree * acc) % 2 else 1
                out = out + OperadElement.from_monomial(
                    mono.replace_vertex(path, target), sign
                )
            acc += g.degree
        reduced = reduce(out, gb)
        row = [Fraction(0)] * len(basis)
        for image, coeff in reduced.coeffs.items():
            row[index[image]] = coeff
        rows.append(row)
    return rows


def _matmul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(a)
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j, aij in enumerate(a[i]):
            if aij:
                row_b = b[j]
                row_out = out[i]
                for t in range(size):
                    if row_b[t]:
                        row_out[t] += aij * row_b[t]
    return out


def d1_h1_check(n: int, cap: int = 8) -> dict:
    """Exact linear algebra for the derivation pair on the arity-n component.

    D1 sends m to b and kills b; H1 sends b to m and kills m; both are
    extended as degree +/-1 derivations with the module's preorder
    Koszul signs.  The report records that D1 squares to zero, that
    D1 H1 + H1 D1 is (n-1) times the identity, that the kernel of D1
    has dimension 2^(n-2), and that the kernel coincides with the span
    of the monomials in the expanded lambda elements.
    """
    if not 2 <= n <= cap:
        raise ValueError(f"arity {n} outside the supported range 2..{cap}")
    gerst = named_operad("ncGerst")
    gb = complete(gerst.presentation, gerst.preferred_order, n)
    basis = sorted(normal_monomials(gb, n), key=lambda mono: mono.key())
    dim = len(basis)
    m_gen = gerst.presentation.generator("m")
    b_gen = gerst.presentation.generator("b")
    mat_d = _derivation_matrix(gb, basis, {"m": b_gen, "b": None}, 1)
    mat_h = _derivation_matrix(gb, basis, {"b": m_gen, "m": None}, 1)
    d_squared = _matmul(mat_d, mat_d)
    anticommutator = [
        [x + y for x, y in zip(row_dh, row_hd)]
        for row_dh, row_hd in zip(_matmul(mat_d, mat_h), _matmul(mat_h, mat_d))
    ]
    scaled_identity = all(
        anticommutator[i][j] == (n - 1 if i == j else 0)
        for i in range(dim)
        for j in range(dim)
    )
    transpose = [[mat_d[i][j] for i in range(dim)] for j in range(dim)]
    kernel_rows = nullspace(transpose, dim)
    kernel = Subspace(dim, kernel_rows)
    lam_gens = tuple(Generator(f"l{k}", k, 1) for k in range(2, n + 1))
    images = _lambda_images(n)
    index = {mono: j for j, mono in enumerate(basis)}
    lam_rows = []
    for tree in enumerate_monomials(lam_gens, n, n - 1):
        reduced = reduce(substitute(OperadElement.from_monomial(tree), images), gb)
        row = [Fraction(0)] * dim
        for mono, coeff in reduced.coeffs.items():
            row[index[mono]] = coeff
        lam_rows.append(row)
    lam_span = Subspace(dim, lam_rows)
    report = {
        "arity": n,
        "component_dim": dim,
        "d1_squared_is_zero": all(not x for row in d_squared for x in row),
        "homotopy_identity": scaled_identity,
        "kernel_dim": kernel.dim,
        "expected_kernel_dim": 2 ** (n - 2),
        "rank": rank(mat_d),
        "kernel_equals_lambda_span": kernel == lam_span,
    }
    report["ok"] = (
        report["d1_squared_is_zero"]
        and report["homotopy_identity"]
        and report["kernel_dim"] == report["expected_kernel_dim"]
        and report["kernel_equals_lambda_span"]
    )
    return report


# -- dimension certificates -----------------------------------------------------


DEFAULT_BRUTE_CAPS = {
    "As": 6,
    "As_M": 5,
    "ncGerst": 6,
    "ncBV3gen": 4,
    "ncBV2gen": 4,
    "qncBV": 4,
    "ncGrav": 7,
    "ncHyperCom": 7,
    "tAs": 7,
    "pAs": 7,
    "2ncGerst": 6,
    "D": 1,
}


def dimension_table(
    name: str,
    n_max: int,
    k: Optional[int] = None,
    basis: Optional[tuple[tuple[str, int], ...]] = None,
) -> dict[int, DimTable]:
    """Graded dimensions per arity, by the cheapest certified route.

    Operads with a claimed Groebner basis are counted through normal
    monomials; the others fall back to brute-force ideal slices, capped
    at the per-name default because that route grows quickly.
    """
    named = named_operad(name, k=k, basis=basis, max_arity=n_max)
    if named.groebner_claimed:
        gb = complete(named.presentation, named.preferred_order, n_max)
        return {n: hilbert(gb, n) for n in range(1, n_max + 1)}
    base, _ = _split_name(name)
    cap = min(n_max, DEFAULT_BRUTE_CAPS.get(base, 4))
    slice_ = IdealSlice(named.presentation, cap)
    return {n: slice_.dimension_by_degree(n) for n in range(1, cap + 1)}


def certify_dimensions(
    name: str,
    n_max: int,
    brute_max: Optional[int] = None,
    k: Optional[int] = None,
    basis: Optional[tuple[tuple[str, int], ...]] = None,
) -> dict:
    """Triple-agreement dimension certificate for a cataloged operad.

    Groebner normal-monomial counts, brute-force ideal-slice ranks, and
    the closed-form table are compared per arity and degree; every route
    that applies to the operad must agree, and the first discrepancy
    raises DimensionMismatch naming the arity and degree.  Brute force
    is capped separately (per-name defaults) because its cost grows much
    faster than the Groebner route.
    """
    named = named_operad(name, k=k, basis=basis, max_arity=n_max)
    base, _ = _split_name(name)
    if brute_max is None:
        brute_max = min(n_max, DEFAULT_BRUTE_CAPS.get(base, 4))
    gb = None
    if named.groebner_claimed:
        gb = complete(named.presentation, named.preferred_order, n_max)
    slice_ = IdealSlice(named.presentation, brute_max) if brute_max >= 1 else None
    tables: dict[int, dict] = {}
    for n in range(1, n_max + 1):
        routes: dict[str, Optional[DimTable]] = {
            "groebner": hilbert(gb, n) if gb is not None else None,
            "brute": (
                slice_.dimension_by_degree(n)
                if slice_ is not None and n <= brute_max
                else None
            ),
            "closed_form": (
                {d: c for d, c in named.expected_dims(n).items() if c}
                if named.expected_dims is not None
                else None
            ),
        }
        available = {route: t for route, t in routes.items() if t is not None}
        if len(available) >= 2:
            reference_route, reference = next(iter(available.items()))
            for route, table in available.items():
                if table != reference:
                    degrees = sorted(set(table) | set(reference))
                    bad = next(
                        d for d in degrees
                        if table.get(d, 0) != reference.get(d, 0)
                    )
                    raise DimensionMismatch(
                        f"{named.name}: first discrepancy at arity {n}, "
                        f"degree {bad}: {route} gives {table.get(bad, 0)}, "
                        f"{reference_route} gives {reference.get(bad, 0)}"
                    )
        some = next(iter(available.values()), {})
        tables[n] = dict(routes)
        tables[n]["total"] = sum(some.values())
    return {
        "name": named.name,
        "range": [1, n_max],
        "status": "ok",
        "tables": tables,
    }


def hypercom_functional_equation(n_max: int = 7) -> dict:
    """Plug the computed dimension series of ncHyperCom into
    q^2 f^2 - f (1 - z + z q^2) + z = 0, truncated past z^n_max.

    The series f collects the graded dimensions: the coefficient of
    q^l z^n is the dimension of the degree-l part of the arity-n
    component, with f = z in arity one.
    """
    named = named_operad("ncHyperCom", max_arity=n_max)
    gb = complete(named.presentation, named.preferred_order, n_max)
    f: dict[int, dict[int, int]] = {n: hilbert(gb, n) for n in range(1, n_max + 1)}

    def add_into(acc, n, l, c):
        if n <= n_max and c:
            acc.setdefault(n, {})
            acc[n][l] = acc[n].get(l, 0) + c
            if not acc[n][l]:
                del acc[n][l]

    residual: dict[int, dict[int, int]] = {}
    for n1, t1 in f.items():
        for n2, t2 in f.items():
            if n1 + n2 > n_max:
                continue
            for l1, c1 in t1.items():
                for l2, c2 in t2.items():
                    add_into(residual, n1 + n2, l1 + l2 + 2, c1 * c2)
    for n, t in f.items():
        for l, c in t.items():
            add_into(residual, n, l, -c)
            add_into(residual, n + 1, l, c)
            add_into(residual, n + 1, l + 2, -c)
    add_into(residual, 1, 0, 1)
    residual = {n: t for n, t in residual.items() if t}
    return {"max_arity": n_max, "holds": not residual, "residual": residual}


# -- the two ncBV presentations -------------------------------------------------


def ncbv_presentations_check(n_max: int = 4) -> dict:
    """Brute-force agreement of the two ncBV presentations.

    Both the three-generator and the two-generator presentations must
    give the same graded dimensions (the closed form of the distributive
    ordering of products and circle classes), and the bracket derived
    from the unary generator in the two-generator presentation must
    satisfy the ncGerst-shape relations modulo the ideal.
    """
    three = named_operad("ncBV3gen")
    two = named_operad("ncBV2gen")
    slice3 = IdealSlice(three.presentation, n_max)
    slice2 = IdealSlice(two.presentation, n_max)
    dims_match = True
    dims = {}
    for n in range(1, n_max + 1):
        d3 = slice3.dimension_by_degree(n)
        d2 = slice2.dimension_by_degree(n)
        closed = {d: c for d, c in _dims_ncbv(n).items() if c}
        dims[n] = {"three_generator": d3, "two_generator": d2, "closed_form": closed}
        dims_match = dims_match and d3 == d2 == closed
    pres = two.presentation
    m_el = OperadElement.from_generator(pres.generator("m"))
    delta_el = OperadElement.from_generator(pres.generator("delta"))
    bracket = (
        delta_el.compose(1, m_el)
        - m_el.compose(1, delta_el)
        - m_el.compose(2, delta_el)
    )
    shape_slice = IdealSlice(pres, 3)
    gerst_shape = (
        m_el.compose(1, bracket) - bracket.compose(2, m_el),
        bracket.compose(1, m_el) - m_el.compose(2, bracket),
        bracket.compose(1, bracket) + bracket.compose(2, bracket),
    )
    bracket_ok = all(shape_slice.contains(rel) for rel in gerst_shape)
    return {
        "max_arity": n_max,
        "dims_match": dims_match,
        "bracket_satisfies_ncgerst": bracket_ok,
        "dims": dims,
        "ok": dims_match and bracket_ok,
    }
