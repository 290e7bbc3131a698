"""Power-commutator presentations of the groups in play, and exact structure.

Each group is a `GroupSchema`: an ordered list of generators, every normal
form being g_0^{e_0} ... g_{k-1}^{e_{k-1}} with exponents mod 3, together
with conjugation rules phi(g_j)g_i = g_j g_i g_j^{-1} (given as a normal-form
word, only for j > i) and power rules for the cubes.  Multiplication rewrites
the concatenated words by left-to-right collection; higher-ordered generators
move rightward past lower-ordered ones.

The catalog:

  G27        the base group: x2 central, phi(x3)x1 = x1 x2^2
  G81        first covering, z12 = [x1-lift, x2-lift] adjoined
  G81_param  the (a, b) family with cubes x1^3 = z12^a, x3^3 = z12^b
  GSHARP     G81 plus a central zeta with zeta^3 = z12 (order settled by
             enumeration, not prose)
  R243       the representation group, z23 adjoined on top of G81
  GBAR       the other stairway: z23 adjoined to G27 first

The commutator convention is [g, h] = g h g^{-1} h^{-1}; with the rules below
this reproduces x2 = [x1, x3], z12 = [xi1, xi2], xi2 = [xi1, xi3] and
z23 = [n2, n3] exactly, and makes the covering maps between the schemas
honest homomorphisms.

Cayley tables are numpy arrays over element codes (the base-3 value of the
exponent vector, most significant generator first, so code order is exactly
lexicographic order on exponent vectors).  Bulk checks -- exhaustive
associativity, homomorphism tests, conjugacy orbits -- are vectorized over
those tables.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class SchemaError(ValueError):
    """Unknown schema name, bad parameters, or malformed rules."""


class CollectionError(RuntimeError):
    """Collection exceeded its step bound; the schema is inconsistent."""


_COLLECT_BOUND = 200_000


class GroupSchema:
    """A power-commutator presentation with exponent-3 normal forms."""

    def __init__(self, name, gens, central, conj_rules, power_rules=None,
                 multiplier=(), params=None):
        self.name = name
        self.gens = tuple(gens)
        k = len(self.gens)
        self.ngens = k
        self.central = frozenset(central)
        self.params = params
        self.multiplier = tuple(multiplier)
        self.conj = dict(conj_rules)
        self.power = tuple((power_rules or {}).get(i, ()) for i in range(k))
        self.key = (name, params)
        self._validate()

    def _validate(self):
        k = self.ngens
        for i in self.central:
            if not 0 <= i < k:
                raise SchemaError("central index out of range")
        for (j, i), word in self.conj.items():
            if not j > i:
                raise SchemaError("conjugation rules must have j > i")
            if i in self.central or j in self.central:
                raise SchemaError("central generators take no explicit rules")
            if any(l >= j for l in word):
                raise SchemaError("rule word for phi(g_%d)g_%d not below g_%d" % (j, i, j))
            if list(word) != sorted(word):
                raise SchemaError("rule words must be normal-form ordered")
        for j, word in enumerate(self.power):
            if any(l >= j for l in word):
                raise SchemaError("power word for g_%d not below g_%d" % (j, j))

    def conj_word(self, j, i):
        """Normal-form word for phi(g_j)g_i; identity action unless listed."""
        return self.conj.get((j, i), (i,))

    def gen_index(self, gen_name):
        try:
            return self.gens.index(gen_name)
        except ValueError:
            raise SchemaError("no generator %r in %s" % (gen_name, self.name))

    def __repr__(self):
        return "GroupSchema(%s)" % (self.name if self.params is None
                                    else "%s%s" % (self.name, (self.params,)))


def collect(schema, letters, bound=_COLLECT_BOUND):
    """Left-to-right collection of a generator word into an exponent vector."""
    w = list(letters)
    conj = schema.conj
    power = schema.power
    i = 0
    steps = 0
    while i < len(w):
        steps += 1
        if steps > bound:
            raise CollectionError("collection exceeded %d steps in %s" % (bound, schema.name))
        a = w[i]
        if i + 1 < len(w) and a > w[i + 1]:
            b = w[i + 1]
            w[i:i + 2] = conj.get((a, b), (b,)) + (a,)
            i = i - 2 if i >= 2 else 0  # a pair or cube may form just behind
            continue
        if i + 2 < len(w) and a == w[i + 1] == w[i + 2]:
            w[i:i + 3] = power[a]
            i = i - 2 if i >= 2 else 0
            continue
        i += 1
    exps = [0] * schema.ngens
    for l in w:
        exps[l] += 1
    if any(e > 2 for e in exps):
        raise CollectionError("collection left an exponent >= 3 in %s" % schema.name)
    return tuple(exps)


# -- the schema catalog ---------------------------------------------------

SCHEMA_NAMES = ("G27", "G81", "G81_param", "GSHARP", "R243", "GBAR")


def schema(name, params=None):
    """Build a schema from the catalog; params is the (a, b) pair mod 3."""
    if name != "G81_param" and params is not None:
        raise SchemaError("%s takes no parameters" % name)
    if name == "G27":
        # x2 is central; phi(x3)x1 = x2^-1 x1 = x1 x2^2
        return GroupSchema("G27", ("x1", "x2", "x3"), central={1},
                           conj_rules={(2, 0): (0, 1, 1)})
    if name == "G81":
        return GroupSchema("G81", ("z12", "xi1", "xi2", "xi3"), central={0},
                           conj_rules=_G81_CONJ, multiplier=("z12",))
    if name == "G81_param":
        if params is None:
            raise SchemaError("G81_param requires an (a, b) parameter pair")
        a, b = (int(params[0]) % 3, int(params[1]) % 3)
        return GroupSchema("G81_param", ("z12", "xi1", "xi2", "xi3"), central={0},
                           conj_rules=_G81_CONJ,
                           power_rules={1: (0,) * a, 3: (0,) * b},
                           multiplier=("z12",), params=(a, b))
    if name == "GSHARP":
        # G81 with an extra central zeta, zeta^3 = z12
        return GroupSchema("GSHARP", ("z12", "zeta", "xi1", "xi2", "xi3"),
                           central={0, 1},
                           conj_rules={(3, 2): (0, 0, 2), (4, 2): (0, 2, 3, 3)},
                           power_rules={1: (0,)})
    if name == "R243":
        # phi(n2)n1 = z12^-1 n1, phi(n3)n1 = z12 n1 n2^2, phi(n3)n2 = z23^-1 n2
        return GroupSchema("R243", ("z12", "z23", "n1", "n2", "n3"),
                           central={0, 1},
                           conj_rules={(3, 2): (0, 0, 2),
                                       (4, 2): (0, 2, 3, 3),
                                       (4, 3): (1, 1, 3)},
                           multiplier=("z12", "z23"))
    if name == "GBAR":
        # z23 = [xb2, xb3] adjoined first; [xb1, xb2] stays trivial
        return GroupSchema("GBAR", ("z23", "xb1", "xb2", "xb3"), central={0},
                           conj_rules={(3, 1): (1, 2, 2), (3, 2): (0, 0, 2)},
                           multiplier=("z23",))
    raise SchemaError("unknown schema %r (know %s)" % (name, ", ".join(SCHEMA_NAMES)))


# phi(xi2)xi1 = z12^2 xi1,  phi(xi3)xi1 = z12 xi1 xi2^2,  phi(xi3)xi2 = xi2
_G81_CONJ = {(2, 1): (0, 0, 1), (3, 1): (0, 1, 2, 2)}


# -- the engine ------------------------------------------------------------

class Group:
    """A schema together with its Cayley table and derived structure.

    Element codes are ints in range(order); code 0 is the identity.  All
    cached structure is built eagerly enough to be shared read-only.
    """

    def __init__(self, sch):
        self.schema = sch
        k = sch.ngens
        self.ngens = k
        self.order = 3 ** k
        self._weights = tuple(3 ** (k - 1 - i) for i in range(k))
        self.gen_codes = tuple(self._weights)  # code of each single generator
        self._table = None
        self._inv = None
        self._cache = {}

    # element code <-> exponent vector ------------------------------------

    def exps_of(self, code):
        out = []
        for wgt in self._weights:
            out.append(code // wgt % 3)
        return tuple(out)

    def code_of(self, exps):
        return sum(e % 3 * w for e, w in zip(exps, self._weights))

    def letters_of(self, code):
        word = []
        for i, wgt in enumerate(self._weights):
            word.extend([i] * (code // wgt % 3))
        return word

    # multiplication -------------------------------------------------------

    def mult_collect(self, g, h):
        """Honest collection product of two codes (the defining operation)."""
        return self.code_of(collect(self.schema, self.letters_of(g) + self.letters_of(h)))

    @property
    def table(self):
        """Cayley table over codes; table[g, h] = g*h."""
        if self._table is None:
            self._table = self._build_table()
        return self._table

    def _build_table(self):
        n = self.order
        right = []
        for i in range(self.ngens):
            col = np.empty(n, dtype=np.int16)
            for g in range(n):
                col[g] = self.code_of(collect(self.schema, self.letters_of(g) + [i]))
            right.append(col)
        table = np.empty((n, n), dtype=np.int16)
        base = np.arange(n, dtype=np.int16)
        for h in range(n):
            vec = base
            for letter in self.letters_of(h):
                vec = right[letter][vec]
            table[:, h] = vec
        return table

    @property
    def inv(self):
        """inv[g] is the code of g^-1."""
        if self._inv is None:
            table = self.table
            hits = np.count_nonzero(table == 0, axis=1)
            if not np.all(hits == 1):
                raise CollectionError("%s table is not a group table" % self.schema.name)
            self._inv = np.nonzero(table == 0)[1].astype(np.int16)
        return self._inv

    def mult(self, g, h):
        return int(self.table[g, h])

    def conjugate(self, g, h):
        """h g h^-1, i.e. phi(h) applied to g."""
        t = self.table
        return int(t[t[h, g], self.inv[h]])

    def commutator(self, g, h):
        """[g, h] = g h g^-1 h^-1."""
        t = self.table
        return int(t[t[t[g, h], self.inv[g]], self.inv[h]])

    def power(self, g, e):
        if e < 0:
            return self.power(int(self.inv[g]), -e)
        t = self.table
        out = 0
        for _ in range(e % self.element_order(g)):
            out = int(t[out, g])
        return out

    def element_order(self, g):
        t = self.table
        x = g
        o = 1
        while x != 0:
            x = int(t[x, g])
            o += 1
            if o > self.order:
                raise CollectionError("order computation ran away")
        return o

    # enumeration ----------------------------------------------------------

    def enumerate_elements(self):
        """Closure of the generators under honest collection multiplication.

        Returns all element codes in code order; the length is the group
        order as actually realized by collection.
        """
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for g in frontier:
                for i in range(self.ngens):
                    h = self.mult_collect(g, self.gen_codes[i])
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return sorted(seen)

    # structure ------------------------------------------------------------

    def center_codes(self):
        if "center" not in self._cache:
            t = self.table
            self._cache["center"] = frozenset(
                g for g in range(self.order) if np.array_equal(t[g], t[:, g]))
        return self._cache["center"]

    def derived_codes(self):
        if "derived" not in self._cache:
            t = self.table
            n = self.order
            gg, hh = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
            gg = gg.ravel()
            hh = hh.ravel()
            comms = t[t[t[gg, hh], self.inv[gg]], self.inv[hh]]
            self._cache["derived"] = self.closure(np.unique(comms))
        return self._cache["derived"]

    def closure(self, codes):
        """Subgroup generated by the given codes (as a frozenset)."""
        t = self.table
        cur = set(int(c) for c in codes)
        cur.add(0)
        while True:
            arr = np.fromiter(cur, dtype=np.int64)
            prods = np.unique(t[np.ix_(arr, arr)])
            new = set(int(p) for p in prods)
            if new <= cur:
                return frozenset(cur)
            cur |= new

    def conjugacy_classes(self):
        """List of (least-code representative, sorted tuple of member codes)."""
        if "classes" not in self._cache:
            t = self.table
            n = self.order
            inv = self.inv
            all_h = np.arange(n)
            seen = np.zeros(n, dtype=bool)
            classes = []
            for g in range(n):
                if seen[g]:
                    continue
                orbit = np.unique(t[t[all_h, g], inv[all_h]])
                seen[orbit] = True
                classes.append((int(orbit.min()), tuple(int(x) for x in orbit)))
            classes.sort()
            self._cache["classes"] = classes
        return self._cache["classes"]

    def class_index_of(self):
        """Array mapping each code to its conjugacy-class index."""
        if "class_index" not in self._cache:
            idx = np.empty(self.order, dtype=np.int16)
            for ci, (_, members) in enumerate(self.conjugacy_classes()):
                for m in members:
                    idx[m] = ci
            self._cache["class_index"] = idx
        return self._cache["class_index"]

    def element_orders(self):
        if "orders" not in self._cache:
            self._cache["orders"] = tuple(self.element_order(g) for g in range(self.order))
        return self._cache["orders"]

    # formatting -------------------------------------------------------------

    def element_str(self, code):
        exps = self.exps_of(code)
        parts = ["%s^%d" % (g, e) for g, e in zip(self.schema.gens, exps) if e]
        return " ".join(parts) if parts else "1"

    def parse_element(self, text):
        text = text.strip()
        exps = [0] * self.ngens
        if text != "1":
            for part in text.split():
                try:
                    gen, _, e = part.partition("^")
                    exps[self.schema.gen_index(gen)] += int(e) if e else 1
                except (ValueError, SchemaError):
                    raise SchemaError("bad element %r for %s" % (text, self.schema.name))
        return self.code_of(exps)

    def element(self, spec):
        """GroupElement from a code, exponent iterable, or text form."""
        if isinstance(spec, GroupElement):
            return spec
        if isinstance(spec, (int, np.integer)):
            return GroupElement(self, self.exps_of(int(spec)))
        if isinstance(spec, str):
            return GroupElement(self, self.exps_of(self.parse_element(spec)))
        return GroupElement(self, tuple(int(e) % 3 for e in spec))

    def generator(self, name):
        return self.element(self.gen_codes[self.schema.gen_index(name)])

    def identity(self):
        return self.element(0)


@lru_cache(maxsize=None)
def get_group(name, params=None):
    """Shared Group instance per schema (tables built once per process)."""
    return Group(schema(name, params))


class GroupElement:
    """A normal-form element of a schema's group; equality is on exponents."""

    __slots__ = ("group", "exps")

    def __init__(self, group, exps):
        self.group = group
        self.exps = tuple(exps)

    @property
    def code(self):
        return self.group.code_of(self.exps)

    def __mul__(self, other):
        self._check(other)
        # the defining operation: left-to-right collection of the two words
        return self.group.element(self.group.mult_collect(self.code, other.code))

    def inverse(self):
        return self.group.element(int(self.group.inv[self.code]))

    def __pow__(self, k):
        return self.group.element(self.group.power(self.code, k))

    def conjugate_by(self, other):
        self._check(other)
        return self.group.element(self.group.conjugate(self.code, other.code))

    def commutator(self, other):
        self._check(other)
        return self.group.element(self.group.commutator(self.code, other.code))

    def order(self):
        return self.group.element_order(self.code)

    def _check(self, other):
        if not isinstance(other, GroupElement) or other.group.schema.key != self.group.schema.key:
            raise SchemaError("elements belong to different schemas")

    def __eq__(self, other):
        return (isinstance(other, GroupElement)
                and self.group.schema.key == other.group.schema.key
                and self.exps == other.exps)

    def __hash__(self):
        return hash((self.group.schema.key, self.exps))

    def __repr__(self):
        return "<%s: %s>" % (self.group.schema.name, self.group.element_str(self.code))


@dataclass(frozen=True)
class Subgroup:
    """A subgroup as an explicit code set, with a chosen generating list."""

    group: Group
    codes: frozenset
    gen_codes: tuple

    @staticmethod
    def generated(group, gens):
        gen_codes = tuple(group.element(g).code for g in gens)
        return Subgroup(group, group.closure(gen_codes), gen_codes)

    @property
    def order(self):
        return len(self.codes)

    def is_abelian(self):
        t = self.group.table
        codes = sorted(self.codes)
        return all(t[a, b] == t[b, a] for a in codes for b in codes)

    def __contains__(self, code):
        return int(code) in self.codes


# -- whole-table checks ----------------------------------------------------

def exhaustive_associativity(table, block=32):
    """(g h) k == g (h k) over all triples; returns a violating triple or None."""
    n = table.shape[0]
    for start in range(0, n, block):
        gs = np.arange(start, min(start + block, n))
        lhs = table[table[gs, :], :]
        rhs = table[gs][:, table.reshape(-1)].reshape(len(gs), n, n)
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            return (int(gs[bad[0]]), int(bad[1]), int(bad[2]))
    return None


def random_triples_associative(table, count, seed=0):
    """Spot-check associativity on `count` uniform triples; None if all pass."""
    n = table.shape[0]
    rng = np.random.default_rng(seed)
    g = rng.integers(0, n, size=count)
    h = rng.integers(0, n, size=count)
    k = rng.integers(0, n, size=count)
    lhs = table[table[g, h], k]
    rhs = table[g, table[h, k]]
    bad = np.nonzero(lhs != rhs)[0]
    if bad.size:
        i = int(bad[0])
        return (int(g[i]), int(h[i]), int(k[i]))
    return None


def check_schema(group):
    """Sound-engine checks: closure order, relations, identity, inverses."""
    sch = group.schema
    n = group.order
    problems = []
    elements = group.enumerate_elements()
    if len(elements) != n or elements != list(range(n)):
        problems.append("enumeration closure has %d elements, expected %d" % (len(elements), n))
    t = group.table
    if not (np.array_equal(t[0, :], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
        problems.append("identity is not neutral")
    for j in range(group.ngens):
        gj = group.gen_codes[j]
        cube = t[t[gj, gj], gj]
        want = group.code_of(collect(sch, list(sch.power[j])))
        if cube != want:
            problems.append("cube of %s violates its power rule" % sch.gens[j])
        for i in range(j):
            lhs = group.conjugate(group.gen_codes[i], gj)
            rhs = group.code_of(collect(sch, list(sch.conj_word(j, i))))
            if lhs != rhs:
                problems.append("phi(%s)%s violates its rule" % (sch.gens[j], sch.gens[i]))
    return problems


# -- fingerprints and quotients ---------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-invariant data; equality is necessary for isomorphism."""

    order: int
    element_orders: tuple      # sorted (order, multiplicity) pairs
    class_sizes: tuple         # sorted (size, multiplicity) pairs
    center_order: int
    derived_order: int
    abelianization_orders: tuple


def _table_orders(table):
    n = table.shape[0]
    out = []
    for g in range(n):
        x, o = g, 1
        while x != 0:
            x = int(table[x, g])
            o += 1
        out.append(o)
    return out


def _table_inverse(table):
    return np.nonzero(table == 0)[1]


def _table_fingerprint(table):
    from collections import Counter
    n = table.shape[0]
    inv = _table_inverse(table)
    orders = Counter(_table_orders(table))
    # conjugacy class sizes
    all_h = np.arange(n)
    seen = np.zeros(n, dtype=bool)
    sizes = Counter()
    for g in range(n):
        if seen[g]:
            continue
        orbit = np.unique(table[table[all_h, g], inv[all_h]])
        seen[orbit] = True
        sizes[len(orbit)] += 1
    center = sum(1 for g in range(n) if np.array_equal(table[g], table[:, g]))
    gg, hh = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    gg, hh = gg.ravel(), hh.ravel()
    comms = np.unique(table[table[table[gg, hh], inv[gg]], inv[hh]])
    derived = set(int(c) for c in comms) | {0}
    while True:
        arr = np.fromiter(derived, dtype=np.int64)
        closed = set(int(p) for p in np.unique(table[np.ix_(arr, arr)]))
        if closed <= derived:
            break
        derived |= closed
    qtable = quotient_table(table, derived)
    ab_orders = Counter(_table_orders(qtable))
    return Fingerprint(
        order=n,
        element_orders=tuple(sorted(orders.items())),
        class_sizes=tuple(sorted(sizes.items())),
        center_order=center,
        derived_order=len(derived),
        abelianization_orders=tuple(sorted(ab_orders.items())),
    )


def quotient_table(table, normal_codes):
    """Cayley table of the quotient by a normal subgroup (given as code set)."""
    n = table.shape[0]
    nc = sorted(normal_codes)
    rep = np.empty(n, dtype=np.int64)
    for g in range(n):
        rep[g] = table[g, nc].min()
    reps = np.unique(rep)
    index = {int(r): i for i, r in enumerate(reps)}
    q = len(reps)
    out = np.empty((q, q), dtype=np.int16)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            out[i, j] = index[int(rep[table[a, b]])]
    return out


def isomorphism_fingerprint(group):
    if "fingerprint" not in group._cache:
        group._cache["fingerprint"] = _table_fingerprint(group.table)
    return group._cache["fingerprint"]


def quotient_fingerprint(group, normal_gens):
    """Fingerprint of group/<normal_gens> (the subgroup must be normal)."""
    codes = group.closure([group.element(g).code for g in normal_gens])
    t = group.table
    inv = group.inv
    arr = np.fromiter(codes, dtype=np.int64)
    for g in range(group.order):
        conj = t[t[g, arr], inv[g]]
        if not set(int(c) for c in conj) <= codes:
            raise SchemaError("subgroup is not normal")
    return _table_fingerprint(quotient_table(t, codes))


# -- covering maps -----------------------------------------------------------

@dataclass
class CheckReport:
    """Outcome of a multi-part verification; failures carry witnesses."""

    name: str
    failures: list
    notes: list = None

    @property
    def passed(self):
        return not self.failures

    def fail(self, message):
        self.failures.append(message)

    def note(self, message):
        if self.notes is None:
            self.notes = []
        self.notes.append(message)

    def __repr__(self):
        state = "pass" if self.passed else "FAIL(%s)" % "; ".join(self.failures)
        return "<%s: %s>" % (self.name, state)


def hom_from_gen_images(big, small, image_codes):
    """Total map big -> small sending each generator to the given code.

    Defined on normal forms by multiplying images; whether it is a
    homomorphism is for the caller to check.
    """
    phi = np.zeros(big.order, dtype=np.int64)
    st = small.table
    for g in range(big.order):
        acc = 0
        for letter in big.letters_of(g):
            acc = int(st[acc, image_codes[letter]])
        phi[g] = acc
    return phi


def homomorphism_violation(big, small, phi):
    """First pair with phi(g h) != phi(g) phi(h), or None."""
    bt = big.table
    st = small.table
    lhs = phi[bt]
    rhs = st[phi[:, None], phi[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        g, h = int(bad[0][0]), int(bad[0][1])
        return g, h
    return None


def verify_efficient_covering(big, kernel_gens, small, gen_map):
    """Check that big --> small is an efficient covering with the given kernel.

    kernel_gens: names of big's generators spanning the declared kernel.
    gen_map: dict sending each remaining big generator name to a small
    generator name (kernel generators map to the identity).
    """
    report = CheckReport("covering %s -> %s" % (big.schema.name, small.schema.name), [])
    kernel_codes = [big.generator(g).code for g in kernel_gens]
    kernel = big.closure(kernel_codes)

    center = big.center_codes()
    derived = big.derived_codes()
    if not kernel <= center:
        report.fail("kernel is not central")
    if not kernel <= derived:
        report.fail("kernel is not inside the derived subgroup")

    image_codes = []
    for name in big.schema.gens:
        target = gen_map.get(name)
        if name in kernel_gens or target is None:
            image_codes.append(0)
        else:
            image_codes.append(small.generator(target).code)
    phi = hom_from_gen_images(big, small, image_codes)

    bad = homomorphism_violation(big, small, phi)
    if bad is not None:
        g, h = bad
        report.fail("not a homomorphism at (%s) * (%s)"
                    % (big.element_str(g), big.element_str(h)))
        return report

    actual_kernel = frozenset(int(g) for g in np.nonzero(phi == 0)[0])
    if actual_kernel != kernel:
        report.fail("kernel is %d elements, declared subgroup has %d"
                    % (len(actual_kernel), len(kernel)))
    if len(set(int(x) for x in phi)) != small.order:
        report.fail("map is not surjective")
    if big.order != len(kernel) * small.order:
        report.fail("|big| != |kernel| * |small|")
    return report


def verify_phi_automorphism(a, b):
    """Relation-transport check inside GSHARP for the parameter pair (a, b).

    The substitution xi1 -> xi1 zeta^a, xi3 -> xi3 zeta^b (zeta, z12, xi2
    fixed) is a shear on normal forms, not a homomorphism of GSHARP when
    (a, b) != (0, 0): it sends the relation xi1^3 = 1 to xi1'^3 = z12^a.
    That relation transport is the point.  Verified here:

      * the substitution permutes GSHARP's elements (bijection);
      * the images satisfy the full (a, b) relation set, in particular
        xi1'^3 = z12^a and xi3'^3 = z12^b;
      * the images regenerate GSHARP together with zeta, and without zeta
        generate a subgroup of order 81;
      * the abstract (a, b)-presented group maps onto that subgroup
        bijectively.

    Whether that subgroup is isomorphic to the unparameterized covering
    group is reported as a note, not a pass/fail condition: brute force
    shows it holds exactly when b = 0 (the b != 0 subgroups have a
    different order-9 element count), so it is data, not an invariant.
    """
    a %= 3
    b %= 3
    gs = get_group("GSHARP")
    report = CheckReport("phi automorphism (a=%d, b=%d)" % (a, b), [])
    t = gs.table
    zeta = gs.generator("zeta").code
    z12 = gs.generator("z12").code
    image_codes = []
    for name in gs.schema.gens:
        g = gs.generator(name).code
        if name == "xi1":
            g = int(t[g, gs.power(zeta, a)])
        elif name == "xi3":
            g = int(t[g, gs.power(zeta, b)])
        image_codes.append(g)
    phi = hom_from_gen_images(gs, gs, image_codes)
    if len(set(int(x) for x in phi)) != gs.order:
        report.fail("substitution map is not a bijection of GSHARP")

    xi1p, xi2p, xi3p = image_codes[2], image_codes[3], image_codes[4]
    if gs.power(xi1p, 3) != gs.power(z12, a):
        report.fail("image of xi1 has cube != z12^%d" % a)
    if gs.power(xi3p, 3) != gs.power(z12, b):
        report.fail("image of xi3 has cube != z12^%d" % b)
    if gs.power(xi2p, 3) != 0:
        report.fail("image of xi2 is not of order dividing 3")
    if gs.commutator(xi1p, xi2p) != z12:
        report.fail("images violate [xi1', xi2'] = z12")
    if gs.commutator(xi1p, xi3p) != xi2p:
        report.fail("images violate xi2' = [xi1', xi3']")
    if gs.commutator(xi2p, xi3p) != 0:
        report.fail("images violate [xi2', xi3'] = 1")
    if any(gs.commutator(z12, g) != 0 for g in image_codes):
        report.fail("z12 is not central on the images")

    regenerated = gs.closure(image_codes)
    if len(regenerated) != gs.order:
        report.fail("images plus zeta fail to regenerate GSHARP")
    primed = gs.closure([z12, xi1p, xi2p, xi3p])
    if len(primed) != 81:
        report.fail("primed generators span order %d, expected 81" % len(primed))

    # the (a, b)-presented group maps onto the primed subgroup bijectively
    param = get_group("G81_param", (a, b))
    onto = hom_from_gen_images(param, gs, [z12, xi1p, xi2p, xi3p])
    bad = homomorphism_violation(param, gs, onto)
    if bad is not None:
        g, h = bad
        report.fail("presented (a,b) group does not map onto the primed "
                    "subgroup: failure at (%s) * (%s)"
                    % (param.element_str(g), param.element_str(h)))
    elif set(int(x) for x in onto) != set(primed):
        report.fail("presented (a,b) group image differs from primed subgroup")

    if isomorphism_fingerprint(param) == isomorphism_fingerprint(get_group("G81")):
        report.note("presented (a,b) group shares the covering group's fingerprint")
    else:
        report.note("presented (a,b) group is NOT isomorphic to the covering group "
                    "(distinct element-order profile)")
    return report


def find_param_isomorphism(a, b):
    """Explicit isomorphism G81_param(a, b) -> G81, or None when none exists.

    Searches generator images u (for xi1) and v (for xi3) in G81; the images
    of xi2 and z12 are then forced as [u, v] and [u, [u, v]].  Brute force
    finds an isomorphism exactly for the b = 0 pairs.
    """
    a %= 3
    b %= 3
    param = get_group("G81_param", (a, b))
    g81 = get_group("G81")
    n = g81.order
    for u in range(n):
        for v in range(n):
            x2 = g81.commutator(u, v)
            z = g81.commutator(u, x2)
            if z == 0:
                continue
            if g81.power(u, 3) != g81.power(z, a):
                continue
            if g81.power(v, 3) != g81.power(z, b):
                continue
            if g81.power(x2, 3) != 0 or g81.commutator(x2, v) != 0:
                continue
            if g81.commutator(z, u) != 0 or g81.commutator(z, v) != 0:
                continue
            images = [z, u, x2, v]
            psi = hom_from_gen_images(param, g81, images)
            if len(set(int(x) for x in psi)) != n:
                continue
            if homomorphism_violation(param, g81, psi) is None:
                return {"z12": z, "xi1": u, "xi2": x2, "xi3": v}
    return None


# the standard covering maps between catalog schemas
COVERING_MAPS = {
    ("R243", "G27"): ({"n1": "x1", "n2": "x2", "n3": "x3"}, ("z12", "z23")),
    ("R243", "G81"): ({"z12": "z12", "n1": "xi1", "n2": "xi2", "n3": "xi3"}, ("z23",)),
    ("R243", "GBAR"): ({"z23": "z23", "n1": "xb1", "n2": "xb2", "n3": "xb3"}, ("z12",)),
    ("G81", "G27"): ({"xi1": "x1", "xi2": "x2", "xi3": "x3"}, ("z12",)),
    ("GBAR", "G27"): ({"xb1": "x1", "xb2": "x2", "xb3": "x3"}, ("z23",)),
}


def covering_data(big_name, small_name):
    """(gen_map, kernel generator names) for a catalog covering."""
    try:
        return COVERING_MAPS[(big_name, small_name)]
    except KeyError:
        raise SchemaError("no catalog covering %s -> %s" % (big_name, small_name))
