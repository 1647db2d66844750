"""Matrix layer: block star/omega recursions and automaton behaviors."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Rtef
from .omega import OmegaVal, act, omega_of


@dataclass(frozen=True)
class RtefMatrix:
    """A matrix of energy functions; blocks taken during recursion may be
    rectangular, automaton matrices are square."""

    rows: tuple[tuple[Rtef, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @staticmethod
    def of(rows) -> "RtefMatrix":
        return RtefMatrix(tuple(tuple(r) for r in rows))

    @staticmethod
    def identity(n: int) -> "RtefMatrix":
        return RtefMatrix.of(
            [[Rtef.one() if i == j else Rtef.bottom() for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zeros(n_rows: int, n_cols: int) -> "RtefMatrix":
        return RtefMatrix.of([[Rtef.bottom()] * n_cols for _ in range(n_rows)])

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int) -> Rtef:
        return self.rows[i][j]

    def dim(self) -> int:
        if self.n_rows != self.n_cols:
            raise ValueError("square matrix required")
        return self.n_rows


def mat_sup(a: RtefMatrix, b: RtefMatrix) -> RtefMatrix:
    if (a.n_rows, a.n_cols) != (b.n_rows, b.n_cols):
        raise ValueError("dimension mismatch in matrix supremum")
    return RtefMatrix.of(
        [[x.sup(y) for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)]
    )


def mat_mul(a: RtefMatrix, b: RtefMatrix) -> RtefMatrix:
    if a.n_cols != b.n_rows:
        raise ValueError("dimension mismatch in matrix product")
    out = []
    for i in range(a.n_rows):
        row = []
        for j in range(b.n_cols):
            acc = Rtef.bottom()
            for k in range(a.n_cols):
                acc = acc.sup(a.rows[i][k].compose(b.rows[k][j]))
            row.append(acc)
        out.append(row)
    return RtefMatrix.of(out)


def _block(m: RtefMatrix, r0: int, r1: int, c0: int, c1: int) -> RtefMatrix:
    return RtefMatrix.of([m.rows[i][c0:c1] for i in range(r0, r1)])


def _blocks(m: RtefMatrix, k: int):
    n = m.dim()
    return (
        _block(m, 0, k, 0, k),
        _block(m, 0, k, k, n),
        _block(m, k, n, 0, k),
        _block(m, k, n, k, n),
    )


def _assemble(tl: RtefMatrix, tr: RtefMatrix, bl: RtefMatrix, br: RtefMatrix) -> RtefMatrix:
    top = [ra + rb for ra, rb in zip(tl.rows, tr.rows)]
    bottom = [ra + rb for ra, rb in zip(bl.rows, br.rows)]
    return RtefMatrix.of(top + bottom)


def mat_star(m: RtefMatrix, split: str = "first") -> RtefMatrix:
    """Reflexive-transitive closure by block recursion.

    With e = (a v b d* c)*, the closure is [[e, e b d*], [d* c e, d* v
    d* c e b d*]]; the two forms of the lower-right block agree in any
    Kleene algebra, and tests pin the result to the path-sum oracle.
    ``split`` picks the pivot block (first row or half) and must not change
    the result.
    """
    n = m.dim()
    if n == 1:
        return RtefMatrix.of([[m.rows[0][0].star()]])
    k = 1 if split == "first" else max(1, n // 2)
    a, b, c, d = _blocks(m, k)
    dstar = mat_star(d, split)
    bds = mat_mul(b, dstar)
    estar = mat_star(mat_sup(a, mat_mul(bds, c)), split)
    tr = mat_mul(estar, bds)
    bl = mat_mul(mat_mul(dstar, c), estar)
    br = mat_sup(dstar, mat_mul(bl, bds))
    return _assemble(estar, tr, bl, br)


def _mat_omega(m: RtefMatrix) -> tuple[OmegaVal, ...]:
    """Entrywise infinite iteration, every state significant (block recursion
    on the first row/column)."""
    n = m.dim()
    if n == 1:
        return (omega_of(m.rows[0][0]),)
    a, b, c, d = _blocks(m, 1)
    a00 = a.rows[0][0]
    dstar = mat_star(d)
    bds = mat_mul(b, dstar)
    f = a00.sup(mat_mul(bds, c).rows[0][0])
    head = omega_of(f)
    frow = mat_mul(RtefMatrix.of([[f.star()]]), bds)
    for j, w in enumerate(_mat_omega(d)):
        head = head.sup(act(frow.rows[0][j], w))
    g = mat_sup(d, mat_mul(mat_mul(c, RtefMatrix.of([[a00.star()]])), b))
    gomega = _mat_omega(g)
    gcol = mat_mul(mat_star(g), c)
    a_omega = omega_of(a00)
    tail = tuple(
        gomega[i].sup(act(gcol.rows[i][0], a_omega)) for i in range(n - 1)
    )
    return (head, *tail)


def mat_omega_accepting(m: RtefMatrix, k: int) -> tuple[OmegaVal, ...]:
    """Per-state truth of visiting the first ``k`` states infinitely often.

    The first k entries iterate the closure of the significant block through
    excursions into the rest; the remaining entries first route into it.
    """
    n = m.dim()
    if not 0 <= k <= n:
        raise ValueError("accepting count out of range")
    if k == 0:
        return (OmegaVal.false(),) * n
    if k == n:
        return _mat_omega(m)
    a, b, c, d = _blocks(m, k)
    dstar = mat_star(d)
    head = _mat_omega(mat_sup(a, mat_mul(mat_mul(b, dstar), c)))
    route = mat_mul(dstar, c)
    tail = []
    for i in range(n - k):
        v = OmegaVal.false()
        for j in range(k):
            v = v.sup(act(route.rows[i][j], head[j]))
        tail.append(v)
    return (*head, *tail)


@dataclass(frozen=True)
class AutomatonRep:
    """Matrix form of an automaton: initial flags, transition matrix, and the
    count of accepting states, which occupy the leading indices."""

    alpha: tuple[bool, ...]
    matrix: RtefMatrix
    accepting_count: int
    state_names: tuple[str, ...] = ()

    def __post_init__(self):
        n = self.matrix.dim()
        if len(self.alpha) != n:
            raise ValueError("initial vector length mismatch")
        if not 0 <= self.accepting_count <= n:
            raise ValueError("accepting count out of range")
        if self.state_names and len(self.state_names) != n:
            raise ValueError("state name count mismatch")

    @property
    def kappa(self) -> tuple[bool, ...]:
        return tuple(i < self.accepting_count for i in range(self.matrix.dim()))

    def state_index(self, name: str) -> int:
        return self.state_names.index(name)


def finite_behavior(rep: AutomatonRep) -> Rtef:
    """Best finite run: supremum of closure entries from initial to accepting."""
    star = mat_star(rep.matrix)
    out = Rtef.bottom()
    for i, init in enumerate(rep.alpha):
        if not init:
            continue
        for j in range(rep.accepting_count):
            out = out.sup(star.rows[i][j])
    return out


def buchi_behavior(rep: AutomatonRep) -> OmegaVal:
    """Truth of an endless run visiting accepting states infinitely often."""
    vec = mat_omega_accepting(rep.matrix, rep.accepting_count)
    out = OmegaVal.false()
    for i, init in enumerate(rep.alpha):
        if init:
            out = out.sup(vec[i])
    return out
