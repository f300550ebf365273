"""Monoids used as carriers of the extensions, and homomorphisms into units.

Two families of carrier exist:

* :class:`FiniteMonoid` -- a monoid given by its multiplication table;
* :class:`IntegerMonoid` -- the three infinite discrete monoids on integers
  that the topological examples need: the additive group ``Z``, the additive
  monoid ``N_+ = {0,1,2,...}`` and the semilattice ``N_max`` with
  ``x*y = max(x, y)``.

Both expose the same duck-typed surface (``unit``, ``mul``, ``mul_arrays``,
``elements``, ``is_unit``, ``set_mul``, ``domain`` ...), so the extension
constructions never branch on the carrier type.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import MonoidError, UndecidableForm, UsageError
from .intset import IntSet

POWER_CACHE_BOUND = 64


@dataclass(frozen=True)
class Classification:
    is_regular: bool
    is_inverse: bool
    is_clifford: bool
    inverse_map: tuple | None = None


class FiniteMonoid:
    """A monoid on ``0..size-1`` given by ``table[a, b] = a*b``.

    The constructor validates closure, the unit and associativity
    exhaustively, so every instance in circulation is a monoid.
    """

    is_finite = True
    discrete = True

    def __init__(self, table, unit=None, name=None, labels=None):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise MonoidError("table must be a non-empty square array")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise MonoidError("table entries must lie in [0, size)")
        idx = np.arange(n)
        if unit is None:
            units = [e for e in range(n)
                     if (table[e] == idx).all() and (table[:, e] == idx).all()]
            if not units:
                raise MonoidError("table has no two-sided identity; use adjoin_unit")
            unit = units[0]
        elif not (0 <= unit < n):
            raise MonoidError(f"unit index {unit} out of range")
        elif not ((table[unit] == idx).all() and (table[:, unit] == idx).all()):
            raise MonoidError(f"element {unit} is not a two-sided identity")
        left = table[table[:, :, None], idx[None, None, :]]
        right = table[idx[:, None, None], table[None, :, :]]
        bad = np.argwhere(left != right)
        if len(bad):
            x, y, z = (int(v) for v in bad[0])
            raise MonoidError(f"not associative at ({x},{y},{z})")
        table.setflags(write=False)
        self.table = table
        self.size = n
        self.unit = int(unit)
        self.name = name or f"monoid{n}"
        self.labels = tuple(labels) if labels else tuple(str(k) for k in range(n))
        self._classification = None
        self._units = None

    def __repr__(self):
        return f"FiniteMonoid({self.name!r}, size={self.size})"

    def __eq__(self, other):
        return (isinstance(other, FiniteMonoid) and self.unit == other.unit
                and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.unit, self.table.tobytes()))

    def _check(self, a):
        if not (0 <= a < self.size):
            raise UsageError(f"element {a} not in monoid of size {self.size}")

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        return int(self.table[a, b])

    def mul_arrays(self, a, b):
        return self.table[a, b]

    def elements(self, gbound=None):
        return range(self.size)

    def contains(self, a):
        return isinstance(a, (int, np.integer)) and 0 <= a < self.size

    @property
    def domain(self):
        return IntSet.interval(0, self.size - 1)

    # units, idempotents, order
    def units(self):
        """The group of units ``H(1)``."""
        if self._units is None:
            t, e = self.table, self.unit
            self._units = frozenset(
                x for x in range(self.size)
                if any(t[x, y] == e and t[y, x] == e for y in range(self.size))
            )
        return self._units

    def is_unit(self, a):
        return a in self.units()

    def unit_inverse(self, a):
        t, e = self.table, self.unit
        for y in range(self.size):
            if t[a, y] == e and t[y, a] == e:
                return y
        raise UsageError(f"element {a} is not a unit")

    @property
    def is_group(self):
        return len(self.units()) == self.size

    def idempotents(self):
        t = self.table
        return frozenset(x for x in range(self.size) if t[x, x] == x)

    def natural_leq(self, e, f):
        """``e <= f`` iff ``ef = fe = e``; both must be idempotent."""
        idem = self.idempotents()
        if e not in idem or f not in idem:
            raise UsageError("natural_leq is defined on idempotents only")
        t = self.table
        return bool(t[e, f] == e and t[f, e] == e)

    def classify(self):
        if self._classification is None:
            t, n = self.table, self.size
            inner = [[y for y in range(n) if t[t[x, y], x] == x] for x in range(n)]
            regular = all(inner)
            gen = [[y for y in inner[x] if t[t[y, x], y] == y] for x in range(n)]
            inverse = all(len(g) == 1 for g in gen)
            inv_map = tuple(g[0] for g in gen) if inverse else None
            clifford = inverse and all(
                t[x, inv_map[x]] == t[inv_map[x], x] for x in range(n))
            self._classification = Classification(regular, inverse, clifford, inv_map)
        return self._classification

    def inverse(self, a):
        c = self.classify()
        if not c.is_inverse:
            raise UsageError(f"{self.name} is not an inverse monoid")
        return c.inverse_map[a]

    @property
    def is_inverse(self):
        return self.classify().is_inverse

    # set-level operations used by the neighbourhood algebra
    def set_mul(self, A: IntSet, B: IntSet) -> IntSet:
        t = self.table
        return IntSet.points(int(t[a, b]) for a in A for b in B)

    def set_inverse(self, A: IntSet) -> IntSet:
        return IntSet.points(self.inverse(a) for a in A)

    # text format
    def to_text(self):
        lines = [f"{self.size} {self.unit}"]
        lines += [" ".join(str(int(v)) for v in row) for row in self.table]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text, name=None):
        rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        try:
            n, unit = int(rows[0][0]), int(rows[0][1])
            table = [[int(v) for v in r] for r in rows[1:]]
        except (IndexError, ValueError) as exc:
            raise MonoidError(f"malformed monoid text: {exc}") from None
        if len(rows[0]) != 2 or len(table) != n or any(len(r) != n for r in table):
            raise MonoidError(f"expected {n} rows of {n} entries after the header")
        return cls(table, unit=unit, name=name)


def adjoin_unit(table, name=None):
    """Adjoin an identity to a semigroup table; the new unit is the last index."""
    t = [list(row) for row in table]
    n = len(t)
    for k, row in enumerate(t):
        row.append(k)
    t.append(list(range(n + 1)))
    return FiniteMonoid(t, unit=n, name=name)


# builtin carriers
def trivial():
    return FiniteMonoid([[0]], name="trivial", labels=["1"])


def semilattice2():
    # 0 = 1, 1 = e
    return FiniteMonoid([[0, 1], [1, 1]], name="semilattice2", labels=["1", "e"])


def chain3():
    # 0 = 1 > 1 = e > 2 = f
    return FiniteMonoid([[0, 1, 2], [1, 1, 2], [2, 2, 2]], name="chain3",
                        labels=["1", "e", "f"])


def cyclic(n):
    """Cyclic group ``Z/n`` written additively; element k is the residue k."""
    t = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteMonoid(t, unit=0, name=f"c{n}")


def leftzero2_plus1():
    # 0 = 1, 1 = a, 2 = b with xy = x on {a, b}
    return FiniteMonoid([[0, 1, 2], [1, 1, 1], [2, 2, 2]], name="leftzero2+1",
                        labels=["1", "a", "b"])


def nil3():
    # 0 = 1, 1 = a, 2 = 0 with a*a = 0
    return FiniteMonoid([[0, 1, 2], [1, 2, 2], [2, 2, 2]], name="nil3",
                        labels=["1", "a", "0"])


class IntegerMonoid:
    """``Z`` under addition, ``N_+`` under addition, or ``N_max`` under max.

    All three are discrete with unit ``0``.  Elements are Python ints.
    """

    is_finite = False
    discrete = True
    unit = 0
    KINDS = ("int-group", "nplus", "nmax")

    def __init__(self, kind):
        if kind not in self.KINDS:
            raise UsageError(f"unknown integer monoid {kind!r}")
        self.kind = kind
        self.name = kind

    def __repr__(self):
        return f"IntegerMonoid({self.kind!r})"

    def __eq__(self, other):
        return isinstance(other, IntegerMonoid) and other.kind == self.kind

    def __hash__(self):
        return hash(("IntegerMonoid", self.kind))

    def contains(self, a):
        if not isinstance(a, (int, np.integer)):
            return False
        return self.kind == "int-group" or a >= 0

    def _check(self, a):
        if not self.contains(a):
            raise UsageError(f"{a!r} is not an element of {self.kind}")

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        if self.kind == "nmax":
            return max(a, b)
        return a + b

    def mul_arrays(self, a, b):
        if self.kind == "nmax":
            return np.maximum(a, b)
        return a + b

    def elements(self, gbound):
        if gbound is None:
            raise UsageError("an infinite carrier needs a g-bound to enumerate")
        if self.kind == "int-group":
            return range(-gbound, gbound + 1)
        return range(0, gbound + 1)

    @property
    def domain(self):
        return IntSet.full() if self.kind == "int-group" else IntSet.upper(0)

    def units(self):
        raise UsageError("the unit group of an infinite carrier is not enumerable")

    def is_unit(self, a):
        return self.kind == "int-group" or a == 0

    def unit_inverse(self, a):
        if not self.is_unit(a):
            raise UsageError(f"{a} is not a unit of {self.kind}")
        return -a

    @property
    def is_group(self):
        return self.kind == "int-group"

    @property
    def is_inverse(self):
        return self.kind in ("int-group", "nmax")

    def inverse(self, a):
        if self.kind == "int-group":
            return -a
        if self.kind == "nmax":
            return a
        raise UsageError("N_+ is not an inverse monoid")

    def set_mul(self, A: IntSet, B: IntSet) -> IntSet:
        if self.kind == "nmax":
            return A.pairwise_max(B)
        return A.minkowski_sum(B)

    def set_inverse(self, A: IntSet) -> IntSet:
        if self.kind == "int-group":
            return A.negate()
        if self.kind == "nmax":
            return A
        raise UsageError("N_+ is not an inverse monoid")


INT_GROUP = IntegerMonoid("int-group")
N_PLUS = IntegerMonoid("nplus")
N_MAX = IntegerMonoid("nmax")


class UnitHom:
    """A map ``theta`` from a finite monoid into its group of units.

    ``image[x]`` is ``theta(x)``.  Well-formedness is checked by
    :func:`check_homomorphism`, not by the constructor, so that ill-formed
    maps can be represented and diagnosed.
    """

    def __init__(self, parent: FiniteMonoid, image, name=None):
        image = np.array(image, dtype=np.int64)
        if image.shape != (parent.size,) or image.min() < 0 or image.max() >= parent.size:
            raise UsageError("image must map every element to an element")
        image.setflags(write=False)
        self.parent = parent
        self.image = image
        self.name = name or "table"
        self._powers = [np.arange(parent.size), image]

    def __repr__(self):
        return f"UnitHom({self.parent.name}, {self.name})"

    @property
    def is_annihilating(self):
        return bool((self.image == self.parent.unit).all())

    def _power_row(self, n):
        while len(self._powers) <= min(n, POWER_CACHE_BOUND):
            self._powers.append(self.image[self._powers[-1]])
        if n <= POWER_CACHE_BOUND:
            return self._powers[n]
        row = self._powers[POWER_CACHE_BOUND]
        for _ in range(n - POWER_CACHE_BOUND):
            row = self.image[row]
        return row

    def power(self, n, s):
        """``theta^n(s)``; ``theta^0`` is the identity map."""
        if n < 0:
            raise UsageError("theta power must be non-negative")
        return int(self._power_row(n)[s])

    def power_arrays(self, k, s):
        kmax = int(k.max()) if np.size(k) else 0
        rows = np.stack([self._power_row(n) for n in range(kmax + 1)])
        return rows[k, s]

    def power_set(self, n, A: IntSet) -> IntSet:
        if n < 0:
            raise UsageError("theta power must be non-negative")
        row = self._power_row(n)
        return IntSet.points(int(row[a]) for a in A)

    def preimage(self, A: IntSet) -> IntSet:
        return IntSet.points(x for x in range(self.parent.size) if int(self.image[x]) in A)


def annihilating(m: FiniteMonoid):
    return UnitHom(m, [m.unit] * m.size, name="annihilating")


def identity_hom(m: FiniteMonoid):
    return UnitHom(m, range(m.size), name="identity")


def homomorphism_violation(h: UnitHom):
    """First reason ``h`` fails to be a homomorphism into ``H(1)``, or None."""
    m = h.parent
    img = h.image
    if img[m.unit] != m.unit:
        return ("unit", m.unit)
    units = m.units()
    for x in range(m.size):
        if int(img[x]) not in units:
            return ("range", x)
    for x, y in product(range(m.size), repeat=2):
        if img[m.table[x, y]] != m.table[img[x], img[y]]:
            return ("multiplicative", x, y)
    return None


def check_homomorphism(h: UnitHom) -> bool:
    return homomorphism_violation(h) is None


class IntGroupEndo:
    """An endomorphism of ``(Z, +)``: annihilating, or ``k -> c*k``.

    The annihilating map is also the only homomorphism of ``N_+`` or
    ``N_max`` into their (trivial) unit groups, so it is accepted there too.
    """

    def __init__(self, kind="annihilating", c=None):
        if kind == "annihilating":
            c = 0
        elif kind == "scale":
            if c is None:
                raise UsageError("scale endomorphism needs a multiplier")
            c = int(c)
        else:
            raise UsageError(f"unknown endomorphism kind {kind!r}")
        self.kind = kind
        self.c = c
        self.name = "annihilating" if kind == "annihilating" else f"scale({c})"

    def __repr__(self):
        return f"IntGroupEndo({self.name})"

    def __eq__(self, other):
        return isinstance(other, IntGroupEndo) and (self.kind, self.c) == (other.kind, other.c)

    def __hash__(self):
        return hash((self.kind, self.c))

    @property
    def is_annihilating(self):
        return self.c == 0

    def __call__(self, k):
        return self.c * k

    def power(self, n, k):
        if n < 0:
            raise UsageError("theta power must be non-negative")
        if n == 0:
            return k
        return self.c ** n * k

    def power_arrays(self, k, s):
        if self.c == 0:
            return np.where(k > 0, 0, s)
        return s * np.power(self.c, k)

    def power_set(self, n, A: IntSet) -> IntSet:
        if n < 0:
            raise UsageError("theta power must be non-negative")
        if n == 0:
            return A
        return A.scale(self.c ** n)

    def preimage(self, A: IntSet) -> IntSet:
        if self.c == 0:
            return IntSet.full() if 0 in A else IntSet.empty()
        if self.c in (1, -1):
            return A.scale(self.c)
        raise UndecidableForm(f"preimage under scale({self.c}) of an interval union")


def theta_power(h, n, s):
    return h.power(n, s)


def validate_hom(carrier, theta):
    """Raise UsageError unless ``theta`` is a usable homomorphism for ``carrier``."""
    if isinstance(carrier, FiniteMonoid):
        if not isinstance(theta, UnitHom) or theta.parent != carrier:
            raise UsageError("a finite carrier needs a UnitHom over the same monoid")
        bad = homomorphism_violation(theta)
        if bad is not None:
            raise UsageError(f"theta is not a homomorphism into H(1): {bad}")
    else:
        if not isinstance(theta, IntGroupEndo):
            raise UsageError("an integer carrier needs an IntGroupEndo")
        if carrier.kind != "int-group" and not theta.is_annihilating:
            raise UsageError(f"{carrier.kind} has trivial units; theta must be annihilating")
