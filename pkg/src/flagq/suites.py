"""Verification suites: each one is a grid of cases, each case an exact check.

A suite exposes ``cases(cfg) -> list[key]`` and ``check(key) -> (ok, detail)``.
Keys are plain tuples so they sort stably and pickle into worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from itertools import permutations, product
from typing import Callable

from .genfun import e_kl_coeff, telescope_check, row_expansion_check, q_l_coeff, splitting_check
from .pfaffian import (
    CoeffSeq,
    det_polynomial,
    ivanov_family,
    ivanov_q_pf,
    jacobi_trudi_s_tilde,
    laurent_schur_pf,
    pfaffian_hypothesis_violation,
    matrix_pfaffian,
    q_flagged_pfaffian,
    schur_pf,
    schur_pf_pair,
)
from .polyring import ZERO, b, is_symmetric_x, parse_json, parse_text, poly_sum, star, swap_xz, x, z
from .shapes_tableaux import (
    FlaggedStrictPartition,
    SkewShape,
    decompose_q,
    decompose_q_factored,
    enumerate_path_tuples,
    enumerate_sst_rowstrict,
    ivanov_q_tableau,
    path_tuple_weight,
    paths_intersect,
    paths_to_tableau,
    expansion_hypothesis,
    q_flagged_tableau,
    recombine,
    s_tilde,
    tableau_to_paths,
    weight_sst,
)
from .vexillary import (
    essential_triples,
    invert_triple,
    ivanov_via_flagged,
    reduce_to_essential,
    schubert_vexillary,
    triple_hypothesis_report,
    triple_shape,
    all_triples,
)


@dataclass(frozen=True)
class GridConfig:
    """Grid bounds; ``None`` means "use the suite's default"."""

    max_lambda: int | None = None
    max_rows: int | None = None
    max_flag: int | None = None
    nx: tuple[int, ...] | None = None

    def over(self, base: GridConfig) -> GridConfig:
        """Fields set here win over ``base``."""
        return GridConfig(
            *(getattr(self, f.name) if getattr(self, f.name) is not None else getattr(base, f.name)
              for f in fields(GridConfig))
        )


@dataclass
class Suite:
    name: str
    locus: str
    cases: Callable[[GridConfig], list[tuple]]
    check: Callable[[tuple], tuple[bool, str]]
    defaults: GridConfig = GridConfig(5, 3, 3, (1, 2, 3))
    informational: bool = False


# -- grids --------------------------------------------------------------------

def strict_partitions(max_part: int, max_rows: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix, bound):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == max_rows:
            return
        for m in range(min(bound - 1, max_part), 0, -1):
            rec(prefix + [m], m)

    rec([], max_part + 1)
    return sorted(out)


def partitions(max_part: int, max_rows: int) -> list[tuple[int, ...]]:
    """Partitions with exactly ``r`` positive parts for r <= max_rows."""
    out = []
    for r in range(1, max_rows + 1):
        for p in product(range(max_part, 0, -1), repeat=r):
            if all(a >= c for a, c in zip(p, p[1:])):
                out.append(p)
    return sorted(out)


def flagged_shapes(cfg: GridConfig) -> list[FlaggedStrictPartition]:
    return [
        FlaggedStrictPartition(lam, f)
        for lam in strict_partitions(cfg.max_lambda, cfg.max_rows)
        for f in product(range(cfg.max_flag + 1), repeat=len(lam))
    ]


def skew_shapes(max_part: int, max_rows: int, max_flag: int) -> list[SkewShape]:
    out = []
    for lam in partitions(max_part, max_rows):
        r = len(lam)
        for mu in product(*(range(l + 1) for l in lam)):
            if any(a < c for a, c in zip(mu, mu[1:])):
                continue
            for f in product(range(max_flag + 1), repeat=r):
                sh = SkewShape(lam, mu, f)
                if sh.jt_compatible():
                    out.append(sh)
    return out


def _shape_key(sh: FlaggedStrictPartition) -> tuple:
    return (sh.lam, sh.flag)


def _shape(key) -> FlaggedStrictPartition:
    return FlaggedStrictPartition(key[0], key[1])


# -- worked examples -------------------------------------------------------

WORKED_EXAMPLES = {
    ((3, 1), (1, 0)): {(3, 1): "1", (2, 1): "z1 - b2"},
    ((5, 3, 1), (2, 1, 0)): {
        (5, 3, 1): "1",
        (4, 3, 1): "z1 - b4 + z2 - b3",
        (5, 2, 1): "z1 - b2",
        (4, 2, 1): "(z1 - b4 + z2 - b3)(z1 - b2)",
        (3, 2, 1): "(z1 - b3)(z2 - b3)(z1 - b2)",
    },
}


def parse_factored(s: str):
    """Parse a product of parenthesised linear forms like '(z1 - b3)(z2 - b3)'."""
    s = s.strip()
    if not s.startswith("("):
        return parse_text(s)
    out = None
    for chunk in s[1:-1].split(")("):
        p = parse_text(chunk)
        out = p if out is None else out * p
    return out


def _worked_cases(cfg):
    return sorted(WORKED_EXAMPLES)


def _squash(s: str) -> str:
    return "".join(s.split())


def _worked_check(key):
    sh = _shape(key)
    got = {mu: (c, t) for mu, c, t in decompose_q_factored(sh)}
    want = WORKED_EXAMPLES[key]
    if set(got) != set(want):
        return False, f"index sets differ: {sorted(got)}"
    for mu, printed in want.items():
        c, t = got[mu]
        if _squash(t) != _squash(printed):
            return False, f"{mu}: rendered {t!r}, printed {printed!r}"
        if c != parse_factored(printed):
            return False, f"{mu}: coefficient {c} differs from {printed}"
    for n_x in (1, 2, 3):
        if recombine([(mu, c) for mu, (c, _) in got.items()], n_x) != q_flagged_tableau(sh, n_x):
            return False, f"recombination differs at n_x={n_x}"
    return True, f"{len(got)} terms"


# -- Pfaffian formula vs tableau sum ---------------------------------------

def _pfeq_cases(cfg):
    return [
        (_shape_key(sh), n)
        for sh in flagged_shapes(cfg)
        if pfaffian_hypothesis_violation(sh) is None
        for n in cfg.nx
    ]


def _pfeq_check(key):
    shk, n_x = key
    sh = _shape(shk)
    t = q_flagged_tableau(sh, n_x)
    p = q_flagged_pfaffian(sh, n_x)
    if t != p:
        return False, f"difference {t - p}"
    return True, f"{len(t)} terms"


# -- informational: which hypothesis set gives equality ------------------------

def _survey_cases(cfg):
    return [(_shape_key(sh), n) for sh in flagged_shapes(cfg) for n in cfg.nx]


def increasing_hypothesis(sh: FlaggedStrictPartition) -> bool:
    """The competing condition: lambda_i - f_i positive and weakly increasing."""
    d = [l - f for l, f in zip(sh.lam, sh.flag)]
    return all(v > 0 for v in d) and all(a <= c for a, c in zip(d, d[1:]))


def _survey_check(key):
    shk, n_x = key
    sh = _shape(shk)
    eq = q_flagged_tableau(sh, n_x) == q_flagged_pfaffian(sh, n_x, checked=False)
    ordered = pfaffian_hypothesis_violation(sh) is None
    increasing = increasing_hypothesis(sh)
    # only the enforced (ordered) set is required to imply equality
    return (not ordered or eq), f"equal={eq} ordered-hyp={ordered} increasing-hyp={increasing}"


# -- monomial tableau formula for Ivanov Q ----------------------------------

def _monomial_cases(cfg):
    return [(lam, n) for lam in strict_partitions(cfg.max_lambda, cfg.max_rows) for n in cfg.nx if n >= 2]


def _monomial_check(key):
    lam, n_x = key
    a = ivanov_via_flagged(lam, n_x)
    p = ivanov_q_pf(lam, n_x)
    t = ivanov_q_tableau(lam, n_x)
    if not (a == p == t):
        return False, f"monomial={a == p} tableau={t == p}"
    return True, f"{len(p)} terms"


# -- Jacobi-Trudi determinant and the lattice-path bijection ----------------

def _jt_cases(cfg):
    return [(sh.lam, sh.mu, sh.flag) for sh in skew_shapes(cfg.max_lambda, cfg.max_rows, cfg.max_flag)]


def _jt_check(key):
    sh = SkewShape(*key)
    tabs = list(enumerate_sst_rowstrict(sh))
    direct = poly_sum(weight_sst(T) for T in tabs)
    det = jacobi_trudi_s_tilde(sh)
    if det != direct:
        return False, f"det - sum = {det - direct}"
    for T in tabs:
        P = tableau_to_paths(T)
        if paths_intersect(P):
            return False, f"image of {T.rows} intersects"
        if paths_to_tableau(P) != T:
            return False, f"round trip fails for {T.rows}"
        if path_tuple_weight(P) != weight_sst(T):
            return False, f"weight differs for {T.rows}"
    tuples = list(enumerate_path_tuples(sh))
    if len(tuples) != len(tabs):
        return False, f"{len(tabs)} tableaux vs {len(tuples)} path tuples"
    if poly_sum(path_tuple_weight(P) for P in tuples) != direct:
        return False, "path generating function differs"
    return True, f"{len(tabs)} tableaux"


# -- Schur-Pfaffian calculus -----------------------------------------------

def _pfcalc_cases(cfg):
    keys = []
    for r in range(1, 5):
        for alpha in product(range(0, 6), repeat=r):
            keys.append(("oracle", alpha))
    for k in range(1, 7):
        for l in range(1, 7):
            keys.append(("pair-antisym", (k, l)))
    for perm in permutations((3, 2, 1)):
        keys.append(("permute", perm))
    for alpha in [(3, 1), (4, 2), (3, 2, 1), (5, 3, 2)]:
        keys.append(("trailing-zero", alpha))
        keys.append(("negative-tail", alpha))
    return keys


_CALC_NX = 2


def _fam(alpha):
    # q^{[a-1]}; entries a <= 0 use q^{[a-1]} too (those sequences are harmless)
    return ivanov_family(alpha, _CALC_NX)


def _pfcalc_check(key):
    kind, arg = key
    if kind == "oracle":
        alpha = arg
        fam = _fam(alpha)
        a, c = schur_pf(fam, alpha), laurent_schur_pf(fam, alpha)
        return a == c, f"{len(a)} terms"
    if kind == "pair-antisym":
        k, l = arg
        ck, cl = q_l_seq(k - 1), q_l_seq(l - 1)
        s = schur_pf_pair(ck, k, cl, l) + schur_pf_pair(cl, l, ck, k)
        return not s, "antisymmetric" if not s else f"sum = {s}"
    if kind == "permute":
        base = (3, 2, 1)
        ref = schur_pf(_fam(base), base)
        got = schur_pf(_fam(arg), arg)
        sign = _perm_sign(base, arg)
        ok = got == ref * sign
        # repeated entries vanish
        rep = schur_pf(_fam((arg[0], arg[0], arg[2])), (arg[0], arg[0], arg[2]))
        return ok and not rep, f"sign {sign:+d}"
    if kind == "trailing-zero":
        alpha = arg
        fam = _fam(alpha)
        ext = schur_pf(fam + [q_l_seq(2)], alpha + (0,))
        return ext == schur_pf(fam, alpha), "trailing zero dropped"
    if kind == "negative-tail":
        alpha = arg
        fam = _fam(alpha) + [q_l_seq(1)]
        v1 = schur_pf(fam, alpha + (-1,))
        v2 = laurent_schur_pf(fam, alpha + (-1,))
        return not v1 and not v2, "vanishes"
    raise KeyError(kind)


def q_l_seq(l: int) -> CoeffSeq:
    from .pfaffian import q_family_seq

    return q_family_seq(l, _CALC_NX)


def _perm_sign(base, perm) -> int:
    idx = [base.index(v) for v in perm]
    inv = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return -1 if inv % 2 else 1


# -- generating-function identities ----------------------------------------

def _ident_cases(cfg):
    keys = []
    for s, t, m, n, nx in product(range(-1, 5), range(-1, 5), range(0, 4), range(0, 4), (1, 2)):
        keys.append(("telescope", (s, t, m, n, nx)))
    for r, f, a, nx in product(range(0, 5), range(0, 5), range(-1, 3), (1, 2)):
        keys.append(("row-expansion", (r, f, a, nx)))
    for r, t, f in product(range(0, 5), range(0, 5), range(0, 5)):
        if r >= t:
            keys.append(("one-row-skew", (r, t, f)))
    for r, f, m in product(range(0, 5), range(0, 5), range(1, 6)):
        keys.append(("split", (r, f, m)))
    for r, f, nx in product(range(1, 5), range(0, 5), (1, 2)):
        keys.append(("one-row-q", (r, f, nx)))
    return keys


def _ident_check(key):
    kind, a = key
    if kind == "telescope":
        return telescope_check(*a), ""
    if kind == "row-expansion":
        return row_expansion_check(*a), ""
    if kind == "one-row-skew":
        r, t, f = a
        lhs = s_tilde(SkewShape((r,), (t,), (f,)))
        rhs = e_kl_coeff(f, r - t - f - 1, r - t, -t)
        return lhs == rhs, ""
    if kind == "split":
        return splitting_check(*a), ""
    if kind == "one-row-q":
        r, f, nx = a
        lhs = q_flagged_tableau(FlaggedStrictPartition((r,), (f,)), nx)
        rhs = poly_sum(
            q_l_coeff(r - k - 1, r - k, nx) * star(e_kl_coeff(f, k - f - 1, k, k - r))
            for k in range(f + 1)
        )
        return lhs == rhs, ""
    raise KeyError(kind)


# -- vexillary triples -----------------------------------------------------

def _vex_cases(cfg):
    return [(t.k, t.p, t.q) for t in essential_triples(3, 4, 4)]


def _vex_check(key):
    from .vexillary import Triple

    t = Triple(*key)
    problems = []
    why = triple_hypothesis_report(t)
    if why:
        problems.append(f"shape {triple_shape(t).lam}/{triple_shape(t).flag}: {why}")
    tab = schubert_vexillary(t, 2, "tableau")
    pf = schubert_vexillary(t, 2, "pfaffian")
    if tab != pf:
        problems.append("tableau and Pfaffian routes differ")
    if swap_xz(tab) != schubert_vexillary(invert_triple(t), 2, "tableau"):
        problems.append("inverse swap identity fails")
    return not problems, "; ".join(problems)


def _vexeq_cases(cfg):
    return [(t.k, t.p, t.q) for t in all_triples(3, 4, 4) if not t.is_essential()]


def _vexeq_check(key):
    from .vexillary import Triple

    t = Triple(*key)
    e = reduce_to_essential(t)
    same = schubert_vexillary(t, 2, "tableau") == schubert_vexillary(e, 2, "tableau")
    return same, f"reduces to {e.k},{e.p},{e.q}"


# -- structural properties -------------------------------------------------

def _struct_cases(cfg):
    keys = [("shape", _shape_key(sh), n) for sh in flagged_shapes(cfg) for n in cfg.nx]
    keys += [("pf2det", n, seed) for n in (2, 4, 6) for seed in range(5)]
    return keys


def random_skew_matrix(n: int, seed: int):
    rng = random.Random(seed)
    gens = [x(1), x(2), z(1), b(0), b(1), b(-1)]
    M = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = poly_sum(g * rng.randint(-3, 3) for g in rng.sample(gens, 2)) + rng.randint(-2, 2)
            M[i][j], M[j][i] = e, -e
    return M


def _struct_check(key):
    if key[0] == "shape":
        _, shk, n_x = key
        sh = _shape(shk)
        q = q_flagged_tableau(sh, n_x)
        if not q.is_homogeneous(sh.size):
            return False, "not homogeneous"
        if not is_symmetric_x(q, n_x):
            return False, "not symmetric in x"
        if parse_text(q.to_text()) != q or parse_json(q.to_json()) != q:
            return False, "serialisation round trip fails"
        if q.to_text() != parse_text(q.to_text()).to_text():
            return False, "text is not canonical"
        return True, ""
    _, n, seed = key
    M = random_skew_matrix(n, seed)
    pf = matrix_pfaffian(M)
    det = det_polynomial(M)
    return pf * pf == det, ""


# -- decomposition --------------------------------------------------------------

def _decomp_cases(cfg):
    return [
        (_shape_key(sh), n)
        for sh in flagged_shapes(cfg)
        if expansion_hypothesis(sh)
        for n in cfg.nx
    ]


def _decomp_check(key):
    shk, n_x = key
    sh = _shape(shk)
    return recombine(decompose_q(sh), n_x) == q_flagged_tableau(sh, n_x), ""


_JT = GridConfig(4, 3, 4, (1,))
_ONE = GridConfig(5, 3, 3, (2,))

SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("worked-examples", "decomposition of two worked flagged shapes", _worked_cases, _worked_check),
        Suite("pfaffian-eq", "Schur-Pfaffian formula equals the flagged tableau sum", _pfeq_cases, _pfeq_check),
        Suite("hypothesis-survey", "which hypothesis set guarantees the Pfaffian formula",
              _survey_cases, _survey_check, _ONE, True),
        Suite("monomial-q", "monomial tableau formula for factorial Q", _monomial_cases, _monomial_check),
        Suite("jacobi-trudi", "flagged Jacobi-Trudi determinant and the lattice-path bijection",
              _jt_cases, _jt_check, _JT),
        Suite("pfaffian-calculus", "Schur-Pfaffian calculus against the Laurent-series oracle",
              _pfcalc_cases, _pfcalc_check),
        Suite("identities", "generating-function identities behind the proof", _ident_cases, _ident_check),
        Suite("vexillary", "vexillary polynomials: both routes and the inverse swap", _vex_cases, _vex_check),
        Suite("vexillary-equivalence", "equivalent triples give one polynomial", _vexeq_cases, _vexeq_check),
        Suite("decomposition", "expansion of flagged Q over factorial Q", _decomp_cases, _decomp_check,
              GridConfig(5, 3, 3, (1, 2))),
        Suite("structure", "homogeneity, x-symmetry, serialisation, Pf^2 = det", _struct_cases, _struct_check),
    ]
}

# older short name, still accepted on the command line
ALIASES = {"theorem-c": "monomial-q"}


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(name)
    return name


def run_case(suite_name: str, key: tuple) -> tuple[tuple, bool, str]:
    ok, detail = SUITES[suite_name].check(key)
    return key, bool(ok), detail


@dataclass
class SuiteReport:
    suite: Suite
    results: list[tuple[tuple, bool, str]] = field(default_factory=list)
    config: GridConfig | None = None

    @property
    def failures(self) -> list[tuple[tuple, bool, str]]:
        return [r for r in self.results if not r[1]]

    @property
    def passed(self) -> bool:
        return not self.failures


def run_suite(name: str, cfg: GridConfig | None = None, threads: int = 1) -> SuiteReport:
    name = resolve(name)
    suite = SUITES[name]
    cfg = (cfg or GridConfig()).over(suite.defaults)
    keys = sorted(suite.cases(cfg), key=repr)
    if threads > 1 and len(keys) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_case, [name] * len(keys), keys, chunksize=4))
    else:
        results = [run_case(name, k) for k in keys]
    results.sort(key=lambda r: repr(r[0]))
    return SuiteReport(suite, results, cfg)


def format_report(rep: SuiteReport) -> str:
    lines = [f"# suite {rep.suite.name}: {rep.suite.locus}"]
    for key, ok, detail in rep.results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {key!r}" + (f"  {detail}" if detail else ""))
    n_fail = len(rep.failures)
    lines.append(f"# {len(rep.results) - n_fail}/{len(rep.results)} passed")
    return "\n".join(lines)
