"""Irreducible representations of the order-243 representation group by spin
type, their exact characters, and the projective restriction to the base
group with its 2-cocycle.

Spin type (eps, mu) records the scalars w^eps, w^mu by which a representation
moves the two central multiplier generators.  The nine types split into the
non-spin type (built on the base group via induced representations), two
partially-spin families (built on the two intermediate coverings via the
intertwiner-extension method for a semidirect product with non-abelian
base), and four purely-spin families (built on the representation group
itself), then inflated to the representation group along the covering maps.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .cyclo import Cyc, ZERO, ONE, OMEGA, OMEGA2, root_of_unity, root_exponent, cyc_cbrt
from .cyclo9 import Cyc9, cyc9_cbrt, scalar_str
from .linalg import CycMatrix, intertwiner_space
from .groups import Subgroup, collect, get_group, covering_data
from .mackey import SubRep, MackeyError, dual_group, orbit_decomposition, induce


class RepError(ValueError):
    """A representation failed a structural requirement."""


class SpinType(NamedTuple):
    eps: int
    mu: int

    @property
    def kind(self):
        if self.eps == 0 and self.mu == 0:
            return "non-spin"
        if self.eps != 0 and self.mu != 0:
            return "purely-spin"
        return "partially-spin"

    def __str__(self):
        return "(%d,%d)" % (self.eps, self.mu)


ALL_SPIN_TYPES = tuple(SpinType(e, m) for e in range(3) for m in range(3))


def _sign_exp(e):
    # spin exponents are customarily written 1, -1; exponent 2 means -1
    return 1 if e % 3 == 1 else -1


def trace_anchor(e):
    """Canonical intertwiner trace -sgn(e)*(w - w^2) from the alpha formula."""
    return (OMEGA - OMEGA2) * (-_sign_exp(e))


def intertwiner_alpha(e):
    """alpha = -sgn(e) (w - w^2)/3, the normalizing scalar of the solved
    partially-spin intertwiner (equals -i sgn(e)/sqrt(3))."""
    return trace_anchor(e) / 3


class Representation:
    """Generator-image representation of a full schema group."""

    def __init__(self, group, images, name, spin_type=None):
        self.group = group
        self.images = dict(images)
        self.name = name
        first = next(iter(self.images.values()))
        self.dim = first.n
        self._pows = {}
        for gen, m in self.images.items():
            self._pows[gen] = (CycMatrix.identity(self.dim), m, m * m)
        if spin_type is None:
            spin_type = self._infer_spin_type()
        self.spin_type = spin_type

    def _infer_spin_type(self):
        vals = {"z12": 0, "z23": 0}
        for gen in self.group.schema.multiplier:
            scal = self.images[gen].as_scalar()
            e = None if scal is None else _root_exponent_any(scal)
            if e is None:
                raise RepError("%s: multiplier %s is not a root-of-unity scalar"
                               % (self.name, gen))
            vals[gen] = e
        return SpinType(vals["z12"], vals["z23"])

    def eval(self, code):
        exps = self.group.exps_of(int(code))
        out = None
        for gen, e in zip(self.group.schema.gens, exps):
            if e:
                m = self._pows[gen][e]
                out = m if out is None else out * m
        return out if out is not None else CycMatrix.identity(self.dim)

    def character(self):
        values = {rep: self.eval(rep).trace()
                  for rep, _ in self.group.conjugacy_classes()}
        return ClassFunction(self.group, values, name=self.name)

    def __repr__(self):
        return "Representation(%s, dim=%d, spin=%s)" % (self.name, self.dim, self.spin_type)


@dataclass
class RepReport:
    name: str
    failures: list  # (description, lhs CycMatrix, rhs CycMatrix)

    @property
    def passed(self):
        return not self.failures

    def first_failure_str(self):
        if self.passed:
            return ""
        desc, lhs, rhs = self.failures[0]
        return "%s: lhs=%s rhs=%s" % (desc, lhs.str_rows(), rhs.str_rows())


def verify_rep(rep):
    """Check every power and conjugation rule of the schema as an exact
    matrix identity, plus the multiplier scalars; also accepts a SubRep."""
    if isinstance(rep, SubRep):
        bad = rep.verify()
        failures = []
        if bad is not None:
            u, g = bad
            failures.append(("table not multiplicative at (%d, %d)" % (u, g),
                             rep.eval(u) * rep.eval(g),
                             rep.eval(rep.subgroup.group.mult(u, g))))
        return RepReport(rep.name or "subrep", failures)

    group = rep.group
    sch = group.schema
    failures = []
    for j, gen in enumerate(sch.gens):
        lhs = rep.images[gen] ** 3
        rhs = rep.eval(group.code_of(collect(sch, list(sch.power[j]))))
        if lhs != rhs:
            failures.append(("cube rule for %s" % gen, lhs, rhs))
            return RepReport(rep.name, failures)
    for j in range(len(sch.gens)):
        for i in range(j):
            gj, gi = sch.gens[j], sch.gens[i]
            lhs = rep.images[gj] * rep.images[gi] * rep.images[gj].inverse()
            rhs = rep.eval(group.code_of(collect(sch, list(sch.conj_word(j, i)))))
            if lhs != rhs:
                failures.append(("conjugation rule phi(%s)%s" % (gj, gi), lhs, rhs))
                return RepReport(rep.name, failures)
    for gen in sch.multiplier:
        scal = rep.images[gen].as_scalar()
        if scal is None or _root_exponent_any(scal) is None:
            failures.append(("multiplier %s not a cube-root scalar" % gen,
                             rep.images[gen], CycMatrix.identity(rep.dim)))
            return RepReport(rep.name, failures)
    return RepReport(rep.name, failures)


@dataclass
class ClassFunction:
    """Exact class function, stored by class representative code."""

    group: object
    values: dict
    name: str = ""

    def at(self, code):
        cls = self.group.class_index_of()[int(code)]
        rep = self.group.conjugacy_classes()[cls][0]
        return self.values[rep]

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.group.schema.key == other.group.schema.key
                and self.values == other.values)

    def key(self):
        return tuple(scalar_str(self.values[rep])
                     for rep, _ in self.group.conjugacy_classes())


def inner_product(c1, c2):
    """(1/|G|) sum_g c1(g) conj(c2(g)), exactly, class by class."""
    if c1.group.schema.key != c2.group.schema.key:
        raise RepError("class functions live on different schemas")
    total = ZERO
    for rep, members in c1.group.conjugacy_classes():
        total = total + c1.values[rep] * c2.values[rep].conj() * len(members)
    return total / c1.group.order


# -- the intertwiner step ---------------------------------------------------

def intertwiner_solutions(rho, w):
    """The three normalized intertwiners J with rho(w u w^-1) J = J rho(u)
    and J^3 = I, for an irreducible rho whose twist by w is equivalent to it.

    Raises when the solution space is not 1-dimensional (a Schur violation)
    or when no scaling in Q(zeta9) normalizes the cube.
    """
    group = rho.subgroup.group
    w = group.element(w).code
    for u in rho.subgroup.codes:
        if group.conjugate(u, w) not in rho.subgroup.codes:
            raise MackeyError("acting element does not preserve the domain")
    pairs = []
    for u in rho.subgroup.gen_codes:
        pairs.append((rho.eval(group.conjugate(u, w)), rho.eval(u)))
    basis = intertwiner_space(pairs, rho.dim)
    if len(basis) != 1:
        raise RepError("intertwiner space has dimension %d, expected 1" % len(basis))
    X = basis[0]
    c = (X ** 3).as_scalar()
    if c is None or c.is_zero():
        raise RepError("intertwiner cube is not a nonzero scalar")
    # the normalizing scalar may need ninth roots of unity: Q(w) first,
    # then Q(zeta9) (always sufficient here since the cube is in Q(w))
    t = cyc_cbrt(ONE / c) if isinstance(c, Cyc) else None
    if t is None:
        t = cyc9_cbrt(ONE / c if isinstance(c, Cyc) else c.inverse())
    if t is None:
        raise RepError("no cube root in Q(zeta9) normalizes the intertwiner")
    out = []
    for k in range(3):
        M = X.scale(t * root_of_unity(k))
        assert M ** 3 == CycMatrix.identity(rho.dim, M.field)
        out.append(M)
    return out


def solve_intertwiner(rho, w, preferred_trace=None):
    """One canonical normalized intertwiner.

    Among the three cube-root scalings the one matching `preferred_trace`
    is returned when that pins a unique solution (the partially-spin anchor
    trace 3*alpha); otherwise the lexicographically least serialization.
    The returned J is re-verified against the twisted equations for w, w^2
    and w^3.
    """
    sols = intertwiner_solutions(rho, w)
    chosen = None
    if preferred_trace is not None:
        hits = [M for M in sols if M.trace() == preferred_trace]
        if len(hits) == 1:
            chosen = hits[0]
    if chosen is None:
        eye = CycMatrix.identity(rho.dim, sols[0].field)
        if eye in sols:
            chosen = eye  # untwisted extension, e.g. under a trivial action
        else:
            chosen = min(sols, key=lambda M: tuple(scalar_str(x)
                                                   for row in M.rows for x in row))

    group = rho.subgroup.group
    wc = group.element(w).code
    for i in (1, 2, 3):
        wi = 0
        for _ in range(i):
            wi = group.mult(wi, wc)
        Ji = chosen ** i
        for u in rho.subgroup.gen_codes:
            if rho.eval(group.conjugate(u, wi)) * Ji != Ji * rho.eval(u):
                raise RepError("intertwiner power %d fails its equation" % i)
    return chosen


def extend_and_tensor(rho, jw, r, w_gen, name):
    """Extend rho across the acting generator and twist by w^r.

    rho must cover every schema generator except `w_gen`, which maps to
    w^r * jw.  The result is verified against the full schema.
    """
    group = rho.subgroup.group
    images = {}
    for gen in group.schema.gens:
        if gen == w_gen:
            images[gen] = jw.scale(root_of_unity(r))
        else:
            code = group.generator(gen).code
            if code not in rho.subgroup.codes:
                raise RepError("generator %s is covered by neither rho nor w" % gen)
            images[gen] = rho.eval(code)
    rep = Representation(group, images, name)
    report = verify_rep(rep)
    if not report.passed:
        raise RepError("extension is not a representation: %s" % report.first_failure_str())
    return rep


# -- catalog construction ----------------------------------------------------

@lru_cache(maxsize=None)
def g27_nonspin_catalog():
    """The 11 irreducibles of the base group: 9 one-dimensional characters
    with trivial central value, and the two induced 3-dimensional ones."""
    g27 = get_group("G27")
    reps = []
    for m in range(3):
        for q in range(3):
            images = {"x1": CycMatrix([[root_of_unity(m)]]),
                      "x2": CycMatrix([[ONE]]),
                      "x3": CycMatrix([[root_of_unity(q)]])}
            reps.append(Representation(g27, images, "Pi(%d,0,%d)" % (m, q)))
    U = Subgroup.generated(g27, ["x1", "x2"])
    duals = dual_group(U, ["x1", "x2"])
    w = g27.generator("x3")
    section = [g27.identity(), w, w * w]
    for n in (1, 2):
        chi = next(c for c in duals if c.label == (0, n))
        ind = induce(chi.as_subrep(), section, name="Pi(0,%d)" % n)
        images = {gen: ind.eval(g27.generator(gen).code) for gen in g27.schema.gens}
        reps.append(Representation(g27, images, "Pi(0,%d)" % n))
    return reps


def induced_base_rep(group, u0_gens, orbit_label, section_gen, name):
    """Orbit representative character of the abelian base, induced one
    step up along the cyclic section (1, s, s^2)."""
    U0 = Subgroup.generated(group, u0_gens)
    duals = dual_group(U0, u0_gens)
    dec = orbit_decomposition(duals, [section_gen])
    orbit = dec.by_representative().get(orbit_label)
    if orbit is None:
        raise RepError("no orbit with representative %s" % (orbit_label,))
    if orbit.stabilizer.order != 1:
        raise RepError("expected a free orbit for %s" % (orbit_label,))
    s = group.generator(section_gen)
    return induce(orbit.representative.as_subrep(), [group.identity(), s, s * s],
                  name=name)


@lru_cache(maxsize=None)
def g81_partial_catalog(eps):
    """The three irreducibles of spin type (eps, 0), eps != 0, on the first
    covering group, via intertwiner extension of the induced P(eps, 0)."""
    if eps % 3 == 0:
        raise RepError("partially-spin type needs eps != 0")
    eps %= 3
    g81 = get_group("G81")
    P = induced_base_rep(g81, ["z12", "xi1"], (eps, 0), "xi2", "P(%d,0)" % eps)
    jw = solve_intertwiner(P, "xi3", preferred_trace=trace_anchor(eps))
    reps = [extend_and_tensor(P, jw, r, "xi3", "Pi(%d,0;%d)" % (eps, r))
            for r in range(3)]
    return P, jw, reps


@lru_cache(maxsize=None)
def gbar_partial_catalog(mu):
    """The three irreducibles of spin type (0, mu), mu != 0, built on the
    other stairway's covering group (z23 adjoined first)."""
    if mu % 3 == 0:
        raise RepError("partially-spin type needs mu != 0")
    mu %= 3
    gbar = get_group("GBAR")
    P = induced_base_rep(gbar, ["z23", "xb2"], (mu, 0), "xb3", "P(0,%d)" % mu)
    jw = solve_intertwiner(P, "xb1", preferred_trace=trace_anchor(mu))
    reps = [extend_and_tensor(P, jw, t, "xb1", "Pi(0,%d;%d)" % (mu, t))
            for t in range(3)]
    return P, jw, reps


@lru_cache(maxsize=None)
def r243_pure_catalog(eps, mu):
    """The three irreducibles of purely-spin type (eps, mu), built on the
    representation group itself."""
    if eps % 3 == 0 or mu % 3 == 0:
        raise RepError("purely-spin type needs eps, mu != 0")
    eps %= 3
    mu %= 3
    r243 = get_group("R243")
    P = induced_base_rep(r243, ["z12", "z23", "n1"], (eps, mu, 0), "n2",
                         "P(%d,%d)" % (eps, mu))
    jw = solve_intertwiner(P, "n3")
    reps = [extend_and_tensor(P, jw, s, "n3", "Pi(%d,%d;%d)" % (eps, mu, s))
            for s in range(3)]
    return P, jw, reps


def inflate(rep, big, gen_map):
    """Promote a quotient-group representation along a covering map.

    gen_map sends big's generator names to source names; missing names (the
    covering kernel) map to the identity matrix.
    """
    eye = CycMatrix.identity(rep.dim)
    images = {gen: rep.images[gen_map[gen]] if gen in gen_map else eye
              for gen in big.schema.gens}
    return Representation(big, images, rep.name)


def irreps_by_spin_type(spin):
    """Complete inequivalent list for one spin type, as representations of
    the representation group (quotient constructions inflated)."""
    spin = SpinType(spin[0] % 3, spin[1] % 3)
    r243 = get_group("R243")
    if spin.kind == "non-spin":
        gen_map, _ = covering_data("R243", "G27")
        reps = [inflate(r, r243, gen_map) for r in g27_nonspin_catalog()]
    elif spin.eps != 0 and spin.mu == 0:
        gen_map, _ = covering_data("R243", "G81")
        reps = [inflate(r, r243, gen_map) for r in g81_partial_catalog(spin.eps)[2]]
    elif spin.eps == 0:
        gen_map, _ = covering_data("R243", "GBAR")
        reps = [inflate(r, r243, gen_map) for r in gbar_partial_catalog(spin.mu)[2]]
    else:
        reps = r243_pure_catalog(spin.eps, spin.mu)[2]
    for rep in reps:
        if rep.spin_type != spin:
            raise RepError("%s landed in spin type %s, wanted %s"
                           % (rep.name, rep.spin_type, spin))
    return sorted(reps, key=lambda r: r.name)


@lru_cache(maxsize=None)
def full_catalog():
    """All 35 irreducibles of the representation group, in table row order."""
    out = []
    for spin in ALL_SPIN_TYPES:
        out.extend(irreps_by_spin_type(spin))
    return tuple(out)


@dataclass
class Census:
    by_type: dict      # SpinType -> sorted dimension list
    total: int
    dim_square_sum: int

    def per_type_square_sums(self):
        return {st: sum(d * d for d in dims) for st, dims in self.by_type.items()}


def catalog_census(catalog):
    by_type = {}
    for rep in catalog:
        by_type.setdefault(rep.spin_type, []).append(rep.dim)
    for st in by_type:
        by_type[st].sort()
    return Census(by_type, len(catalog), sum(r.dim * r.dim for r in catalog))


# -- the spin character table -------------------------------------------------

@dataclass
class CharTable:
    group: object
    classes: list   # (representative code, class size)
    rows: list      # (name, SpinType, dim, list of Cyc values)

    def gram_matrix(self):
        """Exact Gram matrix of the rows under the character inner product."""
        n = len(self.rows)
        sizes = [s for _, s in self.classes]
        out = []
        for i in range(n):
            vi = self.rows[i][3]
            row = []
            for j in range(n):
                vj = self.rows[j][3]
                total = ZERO
                for a, b, s in zip(vi, vj, sizes):
                    total = total + a * b.conj() * s
                row.append(total / self.group.order)
            out.append(row)
        return out

    def column_orthogonality_violation(self):
        """First (g, h) class pair violating sum_chi chi(g) conj(chi(h)) =
        |centralizer(g)| [g ~ h], or None."""
        n = len(self.classes)
        for i in range(n):
            for j in range(n):
                total = ZERO
                for _, _, _, values in self.rows:
                    total = total + values[i] * values[j].conj()
                if i == j:
                    want = Cyc(self.group.order // self.classes[i][1])
                else:
                    want = ZERO
                if total != want:
                    return (i, j, total)
        return None


@lru_cache(maxsize=None)
def spin_character_table():
    r243 = get_group("R243")
    classes = [(rep, len(members)) for rep, members in r243.conjugacy_classes()]
    rows = []
    for rep in full_catalog():
        chi = rep.character()
        values = [chi.values[c] for c, _ in classes]
        rows.append((rep.name, rep.spin_type, rep.dim, values))
    return CharTable(r243, classes, rows)


# -- projective restriction ---------------------------------------------------

@dataclass
class CocycleTable:
    """Factor set on the base group, stored as omega-exponents mod 3."""

    base: object
    exps: np.ndarray  # (27, 27) int8

    def value(self, g, h):
        return root_of_unity(int(self.exps[g, h]))

    def is_trivial(self):
        return not self.exps.any()

    def identity_violation(self):
        """First triple violating a(g,h) a(gh,k) = a(g,hk) a(h,k), or None."""
        t = self.base.table
        e = self.exps.astype(np.int16)
        lhs = (e[:, :, None] + e[t, :]) % 3
        rhs = (e[:, t] + e[None, :, :]) % 3
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return tuple(int(x) for x in bad[0])
        return None


def canonical_section():
    """The exponent-preserving lift of the base group into the
    representation group (zero multiplier exponents)."""
    g27 = get_group("G27")
    r243 = get_group("R243")
    return {g: r243.code_of((0, 0) + g27.exps_of(g)) for g in range(g27.order)}


def restrict_to_projective(rep, section=None):
    """Restrict a representation of the representation group along a section
    of the covering onto the base group.

    Returns (T, cocycle) with T the 27-entry matrix table T(g) = rep(s(g))
    and the exact factor set alpha(g, h) = T(g) T(h) T(gh)^-1, checked to be
    a scalar cube root of unity at every pair.
    """
    g27 = get_group("G27")
    r243 = rep.group
    if r243.schema.name != "R243":
        raise RepError("projective restriction expects a representation of R243")
    if section is None:
        section = canonical_section()
    # the section must invert the covering map
    for g in range(g27.order):
        exps = r243.exps_of(section[g])
        if tuple(exps[2:]) != g27.exps_of(g):
            raise RepError("section does not lift the base group elements")
    if r243.exps_of(section[0]) != (0, 0, 0, 0, 0):
        raise RepError("section must send the identity to the identity")

    T = {g: rep.eval(section[g]) for g in range(g27.order)}
    t27 = g27.table
    exps = np.zeros((g27.order, g27.order), dtype=np.int8)
    for g in range(g27.order):
        Tg = T[g]
        for h in range(g27.order):
            M = Tg * T[h]
            N = T[int(t27[g, h])]
            alpha = _scalar_ratio(M, N)
            e = None if alpha is None else _root_exponent_any(alpha)
            if e is None:
                raise RepError("restriction of %s is not projective at (%d, %d)"
                               % (rep.name, g, h))
            exps[g, h] = e
    return T, CocycleTable(g27, exps)


def _root_exponent_any(x):
    if isinstance(x, Cyc9):
        x = x.to_cyc()
        if x is None:
            return None
    return root_exponent(x)


def _scalar_ratio(M, N):
    """The scalar c with M = c N, or None."""
    c = None
    for i in range(N.n):
        for j in range(N.n):
            if not N[i, j].is_zero():
                c = M[i, j] / N[i, j]
                break
        if c is not None:
            break
    if c is None or M != N.scale(c):
        return None
    return c


# -- alternative constructions used as cross-checks ---------------------------

def mu_route_direct(mu):
    """Spin type (0, mu) built directly on the representation group: the
    one-dimensional spin-(0, mu) characters of the non-abelian subgroup
    generated by the multiplier and the first two lifted generators, induced
    along the last generator's section.  Must match the stairway build up to
    relabeling; used by the test suite."""
    if mu % 3 == 0:
        raise RepError("needs mu != 0")
    mu %= 3
    r243 = get_group("R243")
    U = Subgroup.generated(r243, ["z12", "z23", "n1", "n2"])
    # 1-dimensional characters with z12 -> 1, z23 -> w^mu; they factor
    # through U/<z12> which is elementary abelian
    chis = {}
    for a in range(3):
        for b in range(3):
            images = {}
            for code in U.codes:
                e0, e1, e2, e3, e4 = r243.exps_of(code)
                assert e4 == 0
                images[code] = CycMatrix([[root_of_unity(mu * e1 + a * e2 + b * e3)]])
            rep = SubRep(U, 1, images, name="chi(%d;%d,%d)" % (mu, a, b))
            if rep.verify() is not None:
                raise RepError("direct-route character is not multiplicative")
            chis[(a, b)] = rep
    # orbit of (a, b) under conjugation by n3
    n3 = r243.generator("n3").code
    def act(label):
        rep = chis[label]
        moved = {}
        for code in U.codes:
            moved[code] = rep.eval(r243.conjugate(code, int(r243.inv[n3])))
        for lab2, rep2 in chis.items():
            if all(moved[c] == rep2.eval(c) for c in U.codes):
                return lab2
        raise RepError("direct-route action left the character list")
    seen = set()
    out = []
    n3_el = r243.generator("n3")
    for label in sorted(chis):
        if label in seen:
            continue
        orbit = {label}
        cur = label
        while True:
            cur = act(cur)
            if cur in orbit:
                break
            orbit.add(cur)
        seen |= orbit
        ind = induce(chis[min(orbit)], [r243.identity(), n3_el, n3_el * n3_el],
                     name="Ind%s" % (min(orbit),))
        images = {gen: ind.eval(r243.generator(gen).code) for gen in r243.schema.gens}
        out.append(Representation(r243, images, ind.name))
    return out
