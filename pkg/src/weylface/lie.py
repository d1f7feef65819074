"""Finite-type root systems, Weyl group words and orbit combinatorics.

Conventions
-----------
* Nodes of the Dynkin diagram are labelled ``1..n`` (Bourbaki numbering).
  Subsets of nodes are ``frozenset`` of these labels, and Weyl words are
  tuples of labels.
* A weight is a tuple of ``Fraction`` in the fundamental-weight basis, so
  ``mu[i - 1] == mu(h_i)``.  Roots additionally carry coordinates in the
  simple-root basis.
* ``cartan_matrix[i][j] = alpha_j(h_i)``; column ``j`` is the simple root
  ``alpha_j`` written in fundamental weights.
* Long roots have squared length 2.
"""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import qmath
from .qmath import QMatrix, QVector

Weight = QVector
Subset = frozenset

DEFAULT_MAX_WEYL = 10080

_RANK_RULES = {
    "A": (lambda n: n >= 1, "A_n requires n >= 1"),
    "B": (lambda n: n >= 2, "B_n requires n >= 2"),
    "C": (lambda n: n >= 2, "C_n requires n >= 2"),
    "D": (lambda n: n >= 3, "D_n requires n >= 3"),
    "E": (lambda n: n in (6, 7, 8), "E_n requires n in {6, 7, 8}"),
    "F": (lambda n: n == 4, "F_n requires n = 4"),
    "G": (lambda n: n == 2, "G_n requires n = 2"),
}


class RootSystemError(ValueError):
    pass


class WeylBoundExceeded(RootSystemError):
    def __init__(self, bound: int, partial: int):
        super().__init__(
            f"Weyl subgroup enumeration exceeded the bound {bound} "
            f"(reached {partial} elements); raise WEYLFACE_MAX_WEYL to continue"
        )
        self.bound = bound
        self.partial = partial


def max_weyl() -> int:
    raw = os.environ.get("WEYLFACE_MAX_WEYL")
    if raw is None:
        return DEFAULT_MAX_WEYL
    try:
        value = int(raw)
    except ValueError:
        raise RootSystemError(f"WEYLFACE_MAX_WEYL must be an integer, got {raw!r}")
    if value < 1:
        raise RootSystemError("WEYLFACE_MAX_WEYL must be positive")
    return value


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam not in _RANK_RULES:
            raise RootSystemError(f"unknown Cartan family {self.family!r}")
        ok, rule = _RANK_RULES[fam]
        if not isinstance(self.rank, int) or not ok(self.rank):
            raise RootSystemError(f"invalid rank {self.rank} for type {fam}: {rule}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r} (expected e.g. 'A3')")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(t: CartanType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        # 1-based node labels
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    f = t.family
    if f in "ABCD":
        chain = n if f != "D" else n - 1
        for i in range(1, chain):
            link(i, i + 1)
        if f == "B":
            # alpha_n short
            link(n - 1, n, -1, -2)
        elif f == "C":
            # alpha_n long
            link(n - 1, n, -2, -1)
        elif f == "D":
            link(n - 2, n)
    elif f == "E":
        link(1, 3)
        link(3, 4)
        link(2, 4)
        for i in range(4, n):
            link(i, i + 1)
    elif f == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif f == "G":
        # alpha_1 short, alpha_2 long
        link(1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


def _root_lengths(a: Sequence[Sequence[int]]) -> list[Fraction]:
    """Squared lengths (alpha_i, alpha_i), longest = 2 in each component."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and a[i][j] != 0 and d[j] is None:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * a[i][j] / a[j][i]
                    comp.append(j)
                    queue.append(j)
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = 2 * d[i] / top
    return d  # type: ignore[return-value]


@dataclass(frozen=True)
class Root:
    weight: Weight  # fundamental-weight coordinates
    alpha: tuple[int, ...]  # simple-root coordinates

    @property
    def height(self) -> int:
        return sum(self.alpha)


@dataclass(frozen=True)
class WeylWord:
    """A Weyl group element as a word in simple reflections.

    ``letters = (i1, ..., ik)`` stands for ``s_i1 s_i2 ... s_ik``; the
    rightmost letter acts first.
    """

    letters: tuple[int, ...] = ()
    allowed: frozenset = field(default=frozenset(), compare=False)

    def __len__(self):
        return len(self.letters)

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(reversed(self.letters)), self.allowed)

    def __str__(self):
        if not self.letters:
            return "1"
        return "".join(f"s{i}" for i in self.letters)


IDENTITY = WeylWord()


class RootSystem:
    """Root datum of a finite Cartan type.  Immutable after construction."""

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        self.rank = n = cartan_type.rank
        a = cartan_matrix(cartan_type)
        self.cartan_matrix = a
        self.root_lengths = tuple(_root_lengths(a))
        # (alpha_i, alpha_j) = a_ij (alpha_i, alpha_i) / 2
        self.sym_form: QMatrix = tuple(
            tuple(Fraction(a[i][j]) * self.root_lengths[i] / 2 for j in range(n)) for i in range(n)
        )
        self.simple_roots: tuple[Weight, ...] = tuple(
            tuple(Fraction(a[i][j]) for i in range(n)) for j in range(n)
        )
        a_inv = qmath.inverse(a)
        # (omega_i, omega_k) = (A^-1)_{ik} (alpha_i, alpha_i) / 2
        self.fundamental_weight_gram: QMatrix = tuple(
            tuple(a_inv[i][k] * self.root_lengths[i] / 2 for k in range(n)) for i in range(n)
        )
        self._a_inv = a_inv
        self.positive_roots: tuple[Root, ...] = self._close_roots()
        self._reflections = tuple(self._reflection_matrix(i) for i in range(1, n + 1))

    def __repr__(self):
        return f"RootSystem({self.cartan_type})"

    @property
    def nodes(self) -> frozenset:
        return frozenset(range(1, self.rank + 1))

    def _close_roots(self) -> tuple[Root, ...]:
        n = self.rank
        a = self.cartan_matrix
        start = [tuple(int(i == j) for i in range(n)) for j in range(n)]
        seen = set(start)
        queue = deque(start)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                pairing = sum(a[i][j] * beta[j] for j in range(n))
                image = list(beta)
                image[i] -= pairing
                image = tuple(image)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        positive = [b for b in seen if all(c >= 0 for c in b)]
        positive.sort(key=lambda b: (sum(b), tuple(-c for c in b)))
        return tuple(Root(self.alpha_to_weight(b), b) for b in positive)

    def alpha_to_weight(self, coeffs: Sequence) -> Weight:
        """Map simple-root coordinates to fundamental-weight coordinates."""
        return qmath.matvec(self.cartan_matrix, coeffs)

    def weight_to_alpha(self, mu: Sequence) -> QVector:
        """Map fundamental-weight coordinates to simple-root coordinates."""
        return qmath.matvec(self._a_inv, mu)

    def _reflection_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        a = self.cartan_matrix
        # s_i(mu)_k = mu_k - mu_i * a_{k i}
        return tuple(
            tuple(int(k == j) - (a[k][i - 1] if j == i - 1 else 0) for j in range(n))
            for k in range(n)
        )

    def reflection(self, i: int) -> tuple[tuple[int, ...], ...]:
        return self._reflections[i - 1]

    def positive_roots_in(self, subset: Iterable[int]) -> tuple[Root, ...]:
        """Phi_J^+ : positive roots supported on ``subset``."""
        s = frozenset(subset)
        return tuple(r for r in self.positive_roots if all(c == 0 or (i + 1) in s for i, c in enumerate(r.alpha)))

    def positive_roots_outside(self, subset: Iterable[int]) -> tuple[Root, ...]:
        """Phi^+ minus Phi_J^+."""
        inside = set(self.positive_roots_in(subset))
        return tuple(r for r in self.positive_roots if r not in inside)

    def components(self) -> list[frozenset]:
        """Connected components of the Dynkin diagram."""
        n = self.rank
        a = self.cartan_matrix
        seen: set[int] = set()
        comps = []
        for s in range(1, n + 1):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            while queue:
                i = queue.popleft()
                for j in range(1, n + 1):
                    if j not in comp and a[i - 1][j - 1] != 0:
                        comp.add(j)
                        queue.append(j)
            seen |= comp
            comps.append(frozenset(comp))
        return comps


_CACHE: dict[CartanType, RootSystem] = {}


def build_root_system(t: CartanType | str) -> RootSystem:
    if isinstance(t, str):
        t = CartanType.parse(t)
    if t not in _CACHE:
        _CACHE[t] = RootSystem(t)
    return _CACHE[t]


def _check_rank(rs: RootSystem, *weights: Sequence) -> None:
    for mu in weights:
        if len(mu) != rs.rank:
            raise RootSystemError(f"weight {tuple(map(str, mu))} has length {len(mu)}, expected rank {rs.rank}")


def weight(*coords) -> Weight:
    """``weight(1, 0, '1/2')`` -> tuple of Fractions."""
    if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction)):
        coords = tuple(coords[0])
    return qmath.qvec(coords)


def inner_product(rs: RootSystem, mu: Sequence, nu: Sequence) -> Fraction:
    _check_rank(rs, mu, nu)
    g = rs.fundamental_weight_gram
    n = rs.rank
    total = Fraction(0)
    for i in range(n):
        if mu[i]:
            row = g[i]
            total += mu[i] * sum((row[j] * nu[j] for j in range(n) if nu[j]), Fraction(0))
    return total


def reflect(rs: RootSystem, i: int, mu: Sequence) -> Weight:
    """s_i(mu) = mu - mu(h_i) alpha_i."""
    c = Fraction(mu[i - 1])
    if not c:
        return tuple(Fraction(v) for v in mu)
    alpha = rs.simple_roots[i - 1]
    return tuple(Fraction(m) - c * a for m, a in zip(mu, alpha))


def apply_weyl(rs: RootSystem, w: WeylWord | Sequence[int], mu: Sequence) -> Weight:
    _check_rank(rs, mu)
    letters = w.letters if isinstance(w, WeylWord) else tuple(w)
    out = tuple(Fraction(v) for v in mu)
    for i in reversed(letters):
        out = reflect(rs, i, out)
    return out


def weyl_matrix(rs: RootSystem, w: WeylWord | Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Action of ``w`` on fundamental-weight coordinates (canonical key of ``w``)."""
    letters = w.letters if isinstance(w, WeylWord) else tuple(w)
    n = rs.rank
    m = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for i in letters:
        m = _imatmul(m, rs.reflection(i))
    return m


def _imatmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _as_subset(rs: RootSystem, subset: Iterable[int]) -> frozenset:
    s = frozenset(subset)
    bad = [i for i in s if not (isinstance(i, int) and 1 <= i <= rs.rank)]
    if bad:
        raise RootSystemError(f"subset indices {sorted(bad)} outside 1..{rs.rank}")
    return s


_SUBGROUP_CACHE: dict = {}


def weyl_subgroup(rs: RootSystem, subset: Iterable[int] = None, bound: int | None = None) -> list[WeylWord]:
    """All elements of W_J as shortest words, in BFS (length) order.

    Two words are identified when their action matrices on the
    fundamental-weight basis coincide.
    """
    j = rs.nodes if subset is None else _as_subset(rs, subset)
    bound = max_weyl() if bound is None else bound
    key = (rs.cartan_type, j)
    cached = _SUBGROUP_CACHE.get(key)
    if cached is not None and len(cached) <= bound:
        return list(cached)
    gens = sorted(j)
    ident = weyl_matrix(rs, ())
    seen = {ident: WeylWord((), j)}
    queue = deque([((), ident)])
    while queue:
        letters, mat = queue.popleft()
        for g in gens:
            new = _imatmul(rs.reflection(g), mat)
            if new not in seen:
                word = WeylWord((g,) + letters, j)
                seen[new] = word
                if len(seen) > bound:
                    raise WeylBoundExceeded(bound, len(seen))
                queue.append((word.letters, new))
    result = list(seen.values())
    _SUBGROUP_CACHE[key] = tuple(result)
    return result


def longest_element(rs: RootSystem, subset: Iterable[int] = None) -> WeylWord:
    """The unique element of W_J sending Phi_J^+ to -Phi_J^+."""
    j = rs.nodes if subset is None else _as_subset(rs, subset)
    return max(weyl_subgroup(rs, j), key=len)


def orbit(rs: RootSystem, subset: Iterable[int], mu: Sequence) -> frozenset:
    """W_J(mu), computed by closing under simple reflections in J."""
    j = sorted(_as_subset(rs, subset))
    start = tuple(Fraction(v) for v in mu)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in j:
            y = reflect(rs, i, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def dominant_representative(rs: RootSystem, subset: Iterable[int], nu: Sequence) -> tuple[Weight, WeylWord]:
    """Return ``(nu', w)`` with ``w`` in W_J, ``w(nu) = nu'`` and ``nu'(h_j) >= 0`` for j in J.

    Reflects at the first ``j`` with a negative coordinate until none is
    left; each step moves strictly up in the dominance order on the
    finite orbit, so this terminates.
    """
    j = sorted(_as_subset(rs, subset))
    _check_rank(rs, nu)
    cur = tuple(Fraction(v) for v in nu)
    letters: list[int] = []
    while True:
        for i in j:
            if cur[i - 1] < 0:
                cur = reflect(rs, i, cur)
                letters.insert(0, i)
                break
        else:
            return cur, WeylWord(tuple(letters), frozenset(j))


def support(mu: Sequence) -> frozenset:
    return frozenset(i + 1 for i, v in enumerate(mu) if v != 0)


def j_lambda(mu: Sequence) -> frozenset:
    """Nodes where mu(h_i) is a nonnegative integer."""
    return frozenset(i + 1 for i, v in enumerate(mu) if Fraction(v).denominator == 1 and v >= 0)


def i_lambda(rs: RootSystem, mu: Sequence) -> frozenset:
    """Union of Dynkin components meeting supp(mu)."""
    supp = support(mu)
    out: frozenset = frozenset()
    for comp in rs.components():
        if comp & supp:
            out |= comp
    return out


def is_dominant_integral(mu: Sequence) -> bool:
    return all(Fraction(v).denominator == 1 and v >= 0 for v in mu)


def is_root(rs: RootSystem, mu: Sequence) -> bool:
    mu = tuple(Fraction(v) for v in mu)
    return any(r.weight == mu or qmath.neg(r.weight) == mu for r in rs.positive_roots)


def is_positive_root(rs: RootSystem, mu: Sequence) -> bool:
    mu = tuple(Fraction(v) for v in mu)
    return any(r.weight == mu for r in rs.positive_roots)


def expected_positive_root_count(t: CartanType) -> int:
    n = t.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[t.family]
