"""Little-group machinery for finite semidirect products U x| W, U abelian.

Duals of abelian subgroups, the conjugation action on the dual with the
convention (w.chi)(u) = chi(w^-1 u w), orbit/stabilizer decomposition, and
explicit matrix induction over a coset section on the delta-function basis
(contragredient convention, so inducing the trivial-orbit characters of the
base group reproduces the cyclic shift J exactly).
"""

from dataclasses import dataclass
from itertools import product

from .cyclo import root_of_unity, root_exponent
from .linalg import CycMatrix
from .groups import Subgroup


class MackeyError(ValueError):
    """Violated precondition: non-abelian base, bad section, bad action."""


class DualCharacter:
    """A character of an abelian subgroup, valued in cube roots of unity.

    `label` is the exponent tuple over the chosen independent generators;
    the full value table is kept as omega-exponents per element code.
    """

    def __init__(self, subgroup, gen_codes, label, exps):
        self.subgroup = subgroup
        self.gen_codes = tuple(gen_codes)
        self.label = tuple(label)
        self.exps = exps  # dict: element code -> exponent of omega

    def value(self, code):
        return root_of_unity(self.exps[int(code)])

    def gen_values(self):
        return tuple(root_of_unity(self.exps[g]) for g in self.gen_codes)

    def as_subrep(self, name=None):
        images = {code: CycMatrix([[root_of_unity(e)]]) for code, e in self.exps.items()}
        return SubRep(self.subgroup, 1, images, name or ("chi%s" % (self.label,)))

    def __eq__(self, other):
        return isinstance(other, DualCharacter) and self.exps == other.exps \
            and self.subgroup.codes == other.subgroup.codes

    def __repr__(self):
        return "DualCharacter(label=%s)" % (self.label,)


def dual_group(subgroup, independent_gens):
    """All characters of an abelian subgroup, labeled by exponent tuples.

    The generators must be independent of order 3: their power products must
    enumerate the subgroup bijectively.  The trivial subgroup with no
    generators yields the single trivial character.
    """
    group = subgroup.group
    if not subgroup.is_abelian():
        raise MackeyError("dual_group requires an abelian subgroup")
    gen_codes = [group.element(g).code for g in independent_gens]
    k = len(gen_codes)
    if 3 ** k != subgroup.order:
        raise MackeyError("%d generators cannot span a subgroup of order %d"
                          % (k, subgroup.order))
    # enumerate power products once; they must hit every element exactly once
    table = group.table
    codes_by_vec = {}
    for vec in product(range(3), repeat=k):
        acc = 0
        for g, e in zip(gen_codes, vec):
            for _ in range(e):
                acc = int(table[acc, g])
        codes_by_vec[vec] = acc
    if set(codes_by_vec.values()) != set(subgroup.codes):
        raise MackeyError("generators are not independent in the subgroup")

    duals = []
    for label in product(range(3), repeat=k):
        exps = {}
        for vec, code in codes_by_vec.items():
            exps[code] = sum(l * e for l, e in zip(label, vec)) % 3
        duals.append(DualCharacter(subgroup, gen_codes, label, exps))
    return duals


def act_on_dual(w, chi):
    """(w.chi)(u) = chi(w^-1 u w); the domain must be w-invariant."""
    group = chi.subgroup.group
    w = group.element(w).code
    winv = int(group.inv[w])
    moved = {}
    for code in chi.exps:
        conj = group.conjugate(code, winv)  # w^-1 * code * w
        if conj not in chi.exps:
            raise MackeyError("conjugation by the acting element leaves the domain")
        moved[code] = chi.exps[conj]
    label = tuple(moved[g] for g in chi.gen_codes)
    return DualCharacter(chi.subgroup, chi.gen_codes, label, moved)


@dataclass
class Orbit:
    representative: DualCharacter
    members: tuple          # labels, sorted
    stabilizer: Subgroup


@dataclass
class OrbitDecomposition:
    orbits: list

    def by_representative(self):
        return {orb.representative.label: orb for orb in self.orbits}


def orbit_decomposition(duals, w_gens, group=None):
    """Partition of the dual under the subgroup generated by w_gens.

    Orbit representatives are the lexicographically least labels; each
    stabilizer is returned as an explicit subgroup of <w_gens> and the
    orbit-stabilizer count is checked.
    """
    if not duals:
        return OrbitDecomposition([])
    group = group or duals[0].subgroup.group
    by_label = {chi.label: chi for chi in duals}
    if len(by_label) != len(duals):
        raise MackeyError("duplicate labels in the dual list")
    w_sub = Subgroup.generated(group, list(w_gens))
    gen_codes = [group.element(g).code for g in w_gens]

    seen = set()
    orbits = []
    for label in sorted(by_label):
        if label in seen:
            continue
        frontier = [label]
        members = {label}
        while frontier:
            cur = frontier.pop()
            for w in gen_codes:
                nxt = act_on_dual(w, by_label[cur]).label
                if nxt not in by_label:
                    raise MackeyError("action leaves the listed dual")
                if nxt not in members:
                    members.add(nxt)
                    frontier.append(nxt)
        seen |= members
        rep = by_label[min(members)]
        stab_codes = frozenset(w for w in w_sub.codes
                               if act_on_dual(w, rep).exps == rep.exps)
        stabilizer = Subgroup(group, stab_codes, tuple(sorted(stab_codes)))
        if len(members) * len(stab_codes) != w_sub.order:
            raise MackeyError("orbit-stabilizer count violated")
        orbits.append(Orbit(rep, tuple(sorted(members)), stabilizer))
    return OrbitDecomposition(orbits)


class SubRep:
    """A matrix representation of a subgroup, stored as a full value table."""

    def __init__(self, subgroup, dim, images, name=None):
        self.subgroup = subgroup
        self.dim = dim
        self.images = images
        self.name = name
        if set(images) != set(subgroup.codes):
            raise MackeyError("representation table does not match its domain")

    def eval(self, code):
        return self.images[int(code)]

    def group(self):
        return self.subgroup.group

    def verify(self):
        """Exact homomorphism check over generator edges (hence all pairs)."""
        table = self.subgroup.group.table
        gens = self.subgroup.gen_codes
        if self.eval(0) != CycMatrix.identity(self.dim):
            return (0, 0)
        for u in self.subgroup.codes:
            for g in gens:
                ug = int(table[u, g])
                if self.eval(u) * self.eval(g) != self.eval(ug):
                    return (u, g)
        return None

    def central_exponent(self, code):
        """Exponent e with image(code) = w^e I, or None if not such a scalar."""
        scal = self.eval(code).as_scalar()
        return None if scal is None else root_exponent(scal)

    def character_values(self):
        return {code: m.trace() for code, m in self.images.items()}

    def __repr__(self):
        return "SubRep(%s, dim=%d, |domain|=%d)" % (self.name, self.dim,
                                                    self.subgroup.order)


def induce(rho, section, name=None):
    """Induce a subgroup representation along a right-coset section.

    `section` lists coset representatives s_0, ..., s_{k-1} (s_0 = 1) with
    the induced group being H * {s_j}; the matrix of y has block (j, i)
    equal to rho(u) where s_j y = u s_i.  Raises when the section is not an
    exact transversal or when the result fails the homomorphism check.
    """
    H = rho.subgroup
    group = H.group
    table = group.table
    inv = group.inv
    sect = [group.element(s).code for s in section]
    if sect[0] != 0:
        raise MackeyError("section must start at the identity")

    coset_of = {}
    for i, s in enumerate(sect):
        for h in H.codes:
            y = int(table[h, s])
            if y in coset_of:
                raise MackeyError("section is not a transversal: cosets overlap")
            coset_of[y] = i
    target_codes = frozenset(coset_of)

    k = len(sect)
    dim = k * rho.dim
    zero = CycMatrix.zero(rho.dim)
    images = {}
    for y in target_codes:
        blocks = [[zero] * k for _ in range(k)]
        for j, sj in enumerate(sect):
            t = int(table[sj, y])
            if t not in coset_of:
                raise MackeyError("section does not close under the target")
            i = coset_of[t]
            u = int(table[t, inv[sect[i]]])
            blocks[j][i] = rho.eval(u)
        images[y] = _from_blocks(blocks, rho.dim)

    target = Subgroup(group, target_codes,
                      tuple(H.gen_codes) + tuple(s for s in sect if s))
    out = SubRep(target, dim, images, name)
    bad = out.verify()
    if bad is not None:
        raise MackeyError("induced table is not a homomorphism at %r" % (bad,))
    return out


def _from_blocks(blocks, d):
    k = len(blocks)
    rows = []
    for j in range(k):
        for r in range(d):
            row = []
            for i in range(k):
                row.extend(blocks[j][i].rows[r])
            rows.append(row)
    return CycMatrix(rows)
