"""Bialgebras and Hopf algebras from structure constants.

Structure-constant conventions (d = dim, basis e_0..e_{d-1}):

    mul[i][j][k]    coefficient of e_k in e_i e_j
    unit[k]         coefficient of e_k in 1
    comul[i][j][k]  coefficient of e_j (x) e_k in Delta(e_i)
    counit[i]       eps(e_i)
    antipode[i][j]  coefficient of e_j in s(e_i)

The dual bialgebra is formed with the order-reversing pairing, so the
multiplication on H* is (l1 l2)(h) = l1(h_(2)) l2(h_(1)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .linalg import QQ, SparseMatrix
from .report import AxiomReport
from .tensor import (
    LinMap,
    Space,
    compose_chain,
    flip,
    identity,
    permutation_map,
    rainbow_dual,
)


@dataclass(frozen=True)
class UAA:
    """A unital associative algebra presented by its two structure maps."""

    space: Space
    mu: LinMap
    nu: LinMap


@dataclass
class Bialgebra:
    space: Space
    mu: LinMap
    nu: LinMap
    delta: LinMap
    eps: LinMap
    antipode: LinMap | None = None

    @property
    def field(self):
        return self.mu.field

    @property
    def dim(self):
        return self.space.dim

    def as_uaa(self):
        return UAA(self.space, self.mu, self.nu)

    def same_structure(self, other):
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.mu.matrix == other.mu.matrix
            and self.nu.matrix == other.nu.matrix
            and self.delta.matrix == other.delta.matrix
            and self.eps.matrix == other.eps.matrix
        )

    def __repr__(self):
        return f"Bialgebra({self.space.label}, dim={self.dim}, antipode={'yes' if self.antipode else 'no'})"


def scalar_identity(field):
    return LinMap((), (), SparseMatrix.identity(field, 1))


def check_bialgebra(b, level="bialgebra"):
    """Verify the axioms of the requested level by exact matrix identities.

    level is one of "algebra", "coalgebra", "bialgebra", "hopf".
    """
    if level not in ("algebra", "coalgebra", "bialgebra", "hopf"):
        raise ValueError(f"unknown level {level!r}")
    f = b.field
    H = b.space
    rep = AxiomReport(f"{level} axioms for {H.label}")
    id_H = identity([H], f)
    mu, nu, delta, eps = b.mu, b.nu, b.delta, b.eps

    if level in ("algebra", "bialgebra", "hopf"):
        rep.compare("associativity", mu.compose(mu.tensor(id_H)), mu.compose(id_H.tensor(mu)))
        rep.compare("unit_left", mu.compose(nu.tensor(id_H)), id_H)
        rep.compare("unit_right", mu.compose(id_H.tensor(nu)), id_H)
    if level in ("coalgebra", "bialgebra", "hopf"):
        rep.compare("coassociativity", delta.tensor(id_H).compose(delta), id_H.tensor(delta).compose(delta))
        rep.compare("counit_left", eps.tensor(id_H).compose(delta), id_H)
        rep.compare("counit_right", id_H.tensor(eps).compose(delta), id_H)
    if level in ("bialgebra", "hopf"):
        c = flip(H, H, f)
        lhs = delta.compose(mu)
        rhs = compose_chain([mu.tensor(mu), id_H.tensor(c).tensor(id_H), delta.tensor(delta)])
        rep.compare("bialg_delta_mu", lhs, rhs)
        rep.compare("bialg_delta_nu", delta.compose(nu), nu.tensor(nu))
        rep.compare("bialg_eps_mu", eps.compose(mu), eps.tensor(eps))
        rep.compare("bialg_eps_nu", eps.compose(nu), scalar_identity(f))
    if level == "hopf":
        if b.antipode is None:
            rep.add("antipode_present", False)
        else:
            rep.add("antipode_present", True)
            nu_eps = nu.compose(eps)
            rep.compare("antipode_left", compose_chain([mu, b.antipode.tensor(id_H), delta]), nu_eps)
            rep.compare("antipode_right", compose_chain([mu, id_H.tensor(b.antipode), delta]), nu_eps)
    return rep


def solve_antipode(b, detail=False):
    """Solve the antipode equation; None if no two-sided antipode exists.

    The linear system comes from the left half of the antipode equation
    mu o (s (x) Id) o Delta = nu o eps; any solution is then verified
    against the right half (a one-sided convolution inverse need not be
    two-sided).
    """
    f = b.field
    d = b.dim
    mu_m, delta_m = b.mu.matrix, b.delta.matrix
    # unknown u = c*d + a  <->  s[c, a]  (s maps e_a to sum_c s[c,a] e_c)
    ent = {}
    for (ab, j), dv in delta_m.entries.items():
        a, bb = divmod(ab, d)
        for (i, cb), mv in mu_m.entries.items():
            c, b2 = divmod(cb, d)
            if b2 != bb:
                continue
            key = (i * d + j, c * d + a)
            s = f.add(ent.get(key, f.zero), f.mul(dv, mv))
            if f.is_zero(s):
                ent.pop(key, None)
            else:
                ent[key] = s
    system = SparseMatrix(f, d * d, d * d, ent)
    nu_eps = b.nu.compose(b.eps).matrix
    rhs = [nu_eps.get(i, j) for i in range(d) for j in range(d)]
    from .linalg import solve_linear

    x = solve_linear(system, rhs)
    if x is None:
        return (None, "left antipode system inconsistent") if detail else None
    s_ent = {}
    for c in range(d):
        for a in range(d):
            v = x[c * d + a]
            if not f.is_zero(v):
                s_ent[(c, a)] = v
    s = LinMap((b.space,), (b.space,), SparseMatrix(f, d, d, s_ent))
    id_H = identity([b.space], f)
    right = compose_chain([b.mu, id_H.tensor(s), b.delta])
    if right.matrix != b.nu.compose(b.eps).matrix:
        return (None, "left antipode found but right antipode equation fails") if detail else None
    return (s, "ok") if detail else s


def opposites(b):
    """The twisted structures (mu o c, c o Delta)."""
    c = flip(b.space, b.space, b.field)
    return b.mu.compose(c), c.compose(b.delta)


def mu_on_tensor(mu_a, mu_b):
    """Standard multiplication on the tensor product of two UAAs.

    (mu_a (x) mu_b) o (Id (x) c (x) Id) on (A (x) B) (x) (A (x) B), where A
    and B may themselves be tensor products.
    """
    f = mu_a.field
    A = mu_a.codomain
    B = mu_b.codomain
    la, lb = len(A), len(B)
    mid = permutation_map(
        A + B + A + B,
        tuple(range(la)) + tuple(range(la + lb, la + lb + la)) + tuple(range(la, la + lb)) + tuple(range(la + lb + la, 2 * la + 2 * lb)),
        f,
    )
    return mu_a.tensor(mu_b).compose(mid)


def mu_tensor_square(b):
    """mu_{H (x) H} = (mu (x) mu) o (Id (x) c (x) Id)."""
    return mu_on_tensor(b.mu, b.mu)


def dual_bialgebra(b):
    """The dual bialgebra on H* under the order-reversing pairing."""
    return Bialgebra(
        space=b.space.dual(),
        mu=rainbow_dual(b.delta),
        nu=rainbow_dual(b.eps),
        delta=rainbow_dual(b.mu),
        eps=rainbow_dual(b.nu),
        antipode=rainbow_dual(b.antipode) if b.antipode is not None else None,
    )


# -- group and monoid algebras ------------------------------------------


def _find_identity(table):
    n = len(table)
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            return e
    return None


def _validate_table(table, need_inverses):
    n = len(table)
    for i, row in enumerate(table):
        if len(row) != n or any(not (0 <= v < n) for v in row):
            raise ValueError(f"row {i} is not a permutation-ranged row of length {n}")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"not associative: witness triple {(a, b, c)}")
    e = _find_identity(table)
    if e is None:
        raise ValueError("no two-sided identity element")
    inv = None
    if need_inverses:
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == e and table[b][a] == e:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise ValueError(f"element {a} has no two-sided inverse")
    return e, inv


def _grouplike_bialgebra(table, field, names, label):
    n = len(table)
    space = Space(n, label, tuple(names) if names else None)
    mu = LinMap(
        (space, space),
        (space,),
        SparseMatrix(field, n, n * n, {(table[i][j], i * n + j): field.one for i in range(n) for j in range(n)}),
    )
    delta = LinMap(
        (space,),
        (space, space),
        SparseMatrix(field, n * n, n, {(i * n + i, i): field.one for i in range(n)}),
    )
    eps = LinMap((space,), (), SparseMatrix(field, 1, n, {(0, i): field.one for i in range(n)}))
    return space, mu, delta, eps


def group_algebra(table, names=None, field=QQ, label="H"):
    """Hopf algebra kG of a finite group given by its multiplication table."""
    e, inv = _validate_table(table, need_inverses=True)
    n = len(table)
    space, mu, delta, eps = _grouplike_bialgebra(table, field, names, label)
    nu = LinMap((), (space,), SparseMatrix(field, n, 1, {(e, 0): field.one}))
    antipode = LinMap(
        (space,), (space,), SparseMatrix(field, n, n, {(inv[i], i): field.one for i in range(n)})
    )
    return Bialgebra(space, mu, nu, delta, eps, antipode)


def monoid_algebra(table, names=None, field=QQ, label="H"):
    """Bialgebra of a finite monoid; carries no antipode field."""
    e, _ = _validate_table(table, need_inverses=False)
    n = len(table)
    space, mu, delta, eps = _grouplike_bialgebra(table, field, names, label)
    nu = LinMap((), (space,), SparseMatrix(field, n, 1, {(e, 0): field.one}))
    return Bialgebra(space, mu, nu, delta, eps, antipode=None)


def group_table_from_bialgebra(b):
    """Recover a group table from a group-algebra-shaped bialgebra.

    Requires every basis vector grouplike (Delta(e_i) = e_i (x) e_i,
    eps(e_i) = 1), basis products landing on single basis vectors, and
    two-sided inverses.
    """
    f = b.field
    d = b.dim
    for i in range(d):
        if b.delta.matrix.get(i * d + i, i) != f.one:
            raise ValueError(f"basis vector {i} is not grouplike")
        if b.eps.matrix.get(0, i) != f.one:
            raise ValueError(f"eps(e_{i}) != 1")
    if len(b.delta.matrix.entries) != d:
        raise ValueError("comultiplication is not grouplike on the basis")
    by_col = {}
    for (r, c), v in b.mu.matrix.entries.items():
        by_col.setdefault(c, []).append((r, v))
    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            col = by_col.get(i * d + j, [])
            if len(col) != 1 or col[0][1] != f.one:
                raise ValueError(f"product e_{i} e_{j} is not a basis vector")
            table[i][j] = col[0][0]
    _validate_table(table, need_inverses=True)
    return table


# -- stock tables ---------------------------------------------------------


def cycle_name(perm):
    """Cycle-notation name of a permutation tuple, 1-based labels."""
    n = len(perm)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + "".join(str(x + 1) for x in cyc) + ")")
    return "".join(parts) if parts else "e"


def permutation_group_table(perms):
    """Multiplication table of a set of permutations closed under o.

    Product convention: (p * q)(x) = p(q(x)).
    """
    elems = sorted(set(perms))
    index = {p: i for i, p in enumerate(elems)}
    table = []
    for p in elems:
        row = []
        for q in elems:
            pq = tuple(p[q[x]] for x in range(len(p)))
            if pq not in index:
                raise ValueError("permutation set not closed under composition")
            row.append(index[pq])
        table.append(row)
    names = [cycle_name(p) for p in elems]
    return table, names


def cyclic_group_table(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + [f"g^{k}" if k > 1 else "g" for k in range(1, n)]
    return table, names


def s3_table():
    return permutation_group_table(list(itertools.permutations(range(3))))


def d4_table():
    r = (1, 2, 3, 0)
    s = (3, 2, 1, 0)
    elems = {(0, 1, 2, 3)}
    frontier = [(0, 1, 2, 3)]
    while frontier:
        p = frontier.pop()
        for g in (r, s):
            q = tuple(g[p[x]] for x in range(4))
            if q not in elems:
                elems.add(q)
                frontier.append(q)
    return permutation_group_table(sorted(elems))


def stock_group_table(name):
    """Tables for the generator CLI: Zn, S3, D4."""
    if name.upper() == "S3":
        return s3_table()
    if name.upper() == "D4":
        return d4_table()
    if name[0] in "zZ" and name[1:].isdigit() and int(name[1:]) >= 1:
        return cyclic_group_table(int(name[1:]))
    raise ValueError(f"unknown group name {name!r} (expected Zn, S3 or D4)")
