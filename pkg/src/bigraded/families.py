"""The six classical families of Z2 x Z2-graded matrix algebras.

Each family fixes a grading signature and a membership condition:

  gl          no condition
  sl          zero trace
  so-graded   X^T + X = 0               (graded transpose)
  sp          X^T J + J X = 0           J the graded-antisymmetric form
  so-even     X^T K + K X = 0           K the graded-symmetric form
  so-odd      X^T K' + K' X = 0         K' the odd-size symmetric form

Bases are produced by two independent routes and cross-checked against
each other: exact nullspace computation over the entry unknowns, and
literal block templates whose shapes, symmetry constraints and linked
sub-blocks are written out by hand per family.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ExactMatrix, ONE, Scalar, ZERO, nullspace, span_dim
from .grading import (
    D00,
    D01,
    D10,
    D11,
    DEGREES,
    Degree,
    GradedMatrix,
    GradingSignature,
)

__all__ = [
    "FamilyKind",
    "AlgebraFamily",
    "Membership",
    "DefiningForm",
    "DimensionProfile",
    "GradedBasis",
    "BlockTemplate",
    "Block",
    "family_signature",
    "so_odd_signature_readings",
    "defining_form",
    "is_member",
    "build_basis",
    "dimension_profile",
    "dimension_profile_measured",
    "block_template",
    "template_instances",
    "satisfies_template",
    "classical_counterpart_dims",
]


class FamilyKind(enum.Enum):
    GL = "gl"
    SL = "sl"
    SO_GRADED = "so-graded"
    SP = "sp"
    SO_EVEN = "so-even"
    SO_ODD = "so-odd"


_SIG_KINDS = (FamilyKind.GL, FamilyKind.SL, FamilyKind.SO_GRADED)
_FORM_KINDS = (FamilyKind.SP, FamilyKind.SO_EVEN, FamilyKind.SO_ODD)


@dataclass(frozen=True)
class AlgebraFamily:
    """A family name plus its parameters.

    Kinds gl/sl/so-graded take multiplicities (p, q, r, s); kinds
    sp/so-even/so-odd take (n, p) with 0 <= p <= n.
    """

    kind: FamilyKind
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind in _SIG_KINDS:
            if len(self.params) != 4 or min(self.params) < 0:
                raise ValueError(f"{self.kind.value} needs (p, q, r, s) >= 0")
            if sum(self.params) < 1:
                raise ValueError("total size must be at least 1")
        else:
            if len(self.params) != 2:
                raise ValueError(f"{self.kind.value} needs (n, p)")
            n, p = self.params
            if n < 1 or not (0 <= p <= n):
                raise ValueError(f"need n >= 1 and 0 <= p <= n, got n={n}, p={p}")

    @classmethod
    def gl(cls, p, q, r, s):
        return cls(FamilyKind.GL, (p, q, r, s))

    @classmethod
    def sl(cls, p, q, r, s):
        return cls(FamilyKind.SL, (p, q, r, s))

    @classmethod
    def so_graded(cls, p, q, r, s):
        return cls(FamilyKind.SO_GRADED, (p, q, r, s))

    @classmethod
    def sp(cls, n, p):
        return cls(FamilyKind.SP, (n, p))

    @classmethod
    def so_even(cls, n, p):
        return cls(FamilyKind.SO_EVEN, (n, p))

    @classmethod
    def so_odd(cls, n, p):
        return cls(FamilyKind.SO_ODD, (n, p))

    @property
    def matrix_size(self) -> int:
        if self.kind in _SIG_KINDS:
            return sum(self.params)
        n, _ = self.params
        return 2 * n + 1 if self.kind is FamilyKind.SO_ODD else 2 * n

    @property
    def uses_form(self) -> bool:
        return self.kind in _FORM_KINDS

    def descriptor(self) -> dict:
        if self.kind in _SIG_KINDS:
            p, q, r, s = self.params
            return {"kind": self.kind.value, "p": p, "q": q, "r": r, "s": s}
        n, p = self.params
        return {"kind": self.kind.value, "n": n, "p": p}

    def label(self) -> str:
        if self.kind in _SIG_KINDS:
            return f"{self.kind.value}({','.join(map(str, self.params))})"
        n, p = self.params
        return f"{self.kind.value}(n={n},p={p})"

    @classmethod
    def from_descriptor(cls, d: dict) -> "AlgebraFamily":
        kind = FamilyKind(d["kind"])
        if kind in _SIG_KINDS:
            return cls(kind, (d["p"], d["q"], d["r"], d["s"]))
        return cls(kind, (d["n"], d["p"]))


def family_signature(f: AlgebraFamily) -> GradingSignature:
    """The grading signature each family is defined over."""
    if f.kind in _SIG_KINDS:
        return GradingSignature.sorted_form(*f.params)
    n, p = f.params
    if f.kind is FamilyKind.SO_ODD:
        return GradingSignature(
            [D00] * p + [D11] * (n - p) + [D00] * p + [D11] * (n - p) + [D01]
        )
    return GradingSignature(
        [D00] * p + [D10] * (n - p) + [D11] * p + [D01] * (n - p)
    )


def so_odd_signature_readings(n: int, p: int) -> tuple[GradingSignature, GradingSignature, Degree]:
    """The two coordinate gradings compatible with the so-odd entry
    degrees.

    They differ by adding (0,1) to every coordinate degree, which leaves
    every entry degree (row + column) unchanged, so both readings induce
    the same grading on the matrix algebra and the same dimension
    profile.  They do NOT induce the same graded transpose: its sign
    depends on the coordinate degrees themselves, and only the canonical
    reading (multiplicities 2p, 1, 0, 2(n-p) over the four degrees, the
    one family_signature returns) makes the block form solve the form
    condition.  Returns (canonical, shifted, shift).
    """
    canonical = family_signature(AlgebraFamily.so_odd(n, p))
    shift = D01
    shifted = GradingSignature([d + shift for d in canonical])
    return canonical, shifted, shift


@dataclass(frozen=True)
class Membership:
    """Outcome of a membership test; falsy when the condition fails."""

    ok: bool
    reason: str | None = None
    position: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DefiningForm:
    """The invariant bilinear form of a family, as a graded matrix."""

    label: str
    matrix: GradedMatrix


def _form_entries(f: AlgebraFamily) -> dict[tuple[int, int], int]:
    """Nonzero entries of the defining form, per family, as written:

      sp       blocks (1,3) = +I, (2,4) = +I, (3,1) = -I, (4,2) = +I
      so-even  blocks (1,3) = +I, (2,4) = +I, (3,1) = +I, (4,2) = -I
      so-odd   blocks (1,3) = +I, (2,4) = -I, (3,1) = +I, (4,2) = -I,
               and 1 in the final corner
    """
    n, p = f.params
    m = n - p
    off = [0, p, p + m, 2 * p + m]  # starts of the four size-(p,m,p,m) blocks
    if f.kind is FamilyKind.SP:
        signs = {(0, 2): 1, (1, 3): 1, (2, 0): -1, (3, 1): 1}
    elif f.kind is FamilyKind.SO_EVEN:
        signs = {(0, 2): 1, (1, 3): 1, (2, 0): 1, (3, 1): -1}
    elif f.kind is FamilyKind.SO_ODD:
        signs = {(0, 2): 1, (1, 3): -1, (2, 0): 1, (3, 1): -1}
    else:
        raise ValueError(f"{f.kind.value} has no defining form")
    sizes = [p, m, p, m]
    out: dict[tuple[int, int], int] = {}
    for (bi, bj), sgn in signs.items():
        for t in range(sizes[bi]):
            out[(off[bi] + t, off[bj] + t)] = sgn
    if f.kind is FamilyKind.SO_ODD:
        out[(2 * n, 2 * n)] = 1
    return out


def defining_form(f: AlgebraFamily) -> DefiningForm:
    if not f.uses_form:
        raise ValueError(f"{f.kind.value} has no defining form")
    sig = family_signature(f)
    mat = GradedMatrix.from_entries(
        sig, {pos: Scalar(v) for pos, v in _form_entries(f).items()}, degree="infer"
    )
    label = {"sp": "J", "so-even": "K", "so-odd": "K'"}[f.kind.value]
    return DefiningForm(label, mat)


def is_member(f: AlgebraFamily, A: GradedMatrix) -> Membership:
    """Test the family's defining condition on one matrix.

    The matrix must live over the family's signature; a mismatch is a
    usage error, not a failed test.
    """
    if A.signature != family_signature(f):
        raise ValueError("signature mismatch: matrix is not over the family signature")
    if f.kind is FamilyKind.GL:
        return Membership(True)
    if f.kind is FamilyKind.SL:
        t = A.trace()
        if t:
            return Membership(False, f"trace is {t}, not zero")
        return Membership(True)
    if f.kind is FamilyKind.SO_GRADED:
        cond = (A.graded_transpose() + A).entries
    else:
        M = defining_form(f).matrix
        cond = (A.graded_transpose() @ M + M @ A).entries
    bad = cond.first_nonzero()
    if bad is None:
        return Membership(True)
    i, j, v = bad
    return Membership(
        False, f"defining condition has value {v} at entry ({i}, {j})", (i, j)
    )


@dataclass(frozen=True)
class DimensionProfile:
    """Dimensions of the four homogeneous components.

    The total is always the plain sum of the components.  Closed-form
    profiles report whatever the configured expression evaluates to, even
    where that disagrees with the measured count; the dims reporting
    surfaces such disagreements instead of correcting them.
    """

    d00: int
    d01: int
    d10: int
    d11: int

    @property
    def total(self) -> int:
        return self.d00 + self.d01 + self.d10 + self.d11

    def as_dict(self) -> dict:
        return {
            "d00": self.d00,
            "d01": self.d01,
            "d10": self.d10,
            "d11": self.d11,
            "total": self.total,
        }

    def by_degree(self, d: Degree) -> int:
        return (self.d00, self.d01, self.d10, self.d11)[d.code]


@dataclass
class GradedBasis:
    """Ordered homogeneous basis of one family instance."""

    family: AlgebraFamily
    signature: GradingSignature
    elements: list[GradedMatrix]

    def __len__(self) -> int:
        return len(self.elements)

    def profile(self) -> DimensionProfile:
        counts = [0, 0, 0, 0]
        for el in self.elements:
            counts[el.degree.code] += 1
        return DimensionProfile(*counts)

    def to_json(self) -> dict:
        return {
            "family": self.family.kind.value,
            "params": self.family.descriptor(),
            "signature": self.signature.to_json(),
            "elements": [el.to_json() for el in self.elements],
            "profile": self.profile().as_dict(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GradedBasis":
        family = AlgebraFamily.from_descriptor(obj["params"])
        elements = [GradedMatrix.from_json(e) for e in obj["elements"]]
        sig = (
            elements[0].signature
            if elements
            else GradingSignature(
                tuple(Degree(a1, a2) for a1, a2 in obj["signature"])
            )
        )
        return cls(family, sig, elements)


class FamilyConstructionError(RuntimeError):
    """Internal inconsistency between the two basis construction routes."""


def _condition_columns(
    f: AlgebraFamily,
    sig: GradingSignature,
    positions: list[tuple[int, int]],
    ts,
    form: dict[tuple[int, int], int] | None,
) -> tuple[list[tuple[int, int]], ExactMatrix]:
    """Constraint matrix for the membership condition restricted to the
    given entry positions.

    Column t is the (sparse) image of the unit matrix at positions[t]
    under the condition map, flattened over the touched output positions.
    Rows of zeros are dropped: only output positions actually touched are
    kept, in sorted order.
    """
    cols: list[dict[tuple[int, int], Fraction]] = []
    if f.kind is FamilyKind.GL:
        cols = [{} for _ in positions]
    elif f.kind is FamilyKind.SL:
        for (j, k) in positions:
            cols.append({(0, 0): Fraction(1)} if j == k else {})
    elif f.kind is FamilyKind.SO_GRADED:
        # image of E_jk under X -> X^T + X
        for (j, k) in positions:
            col: dict[tuple[int, int], Fraction] = {}
            col[(j, k)] = col.get((j, k), Fraction(0)) + 1
            col[(k, j)] = col.get((k, j), Fraction(0)) + ts[k][j]
            cols.append({pos: v for pos, v in col.items() if v})
    else:
        # image of E_jk under X -> X^T M + M X with M a signed permutation
        rows_of = {}
        cols_of = {}
        for (a, b), v in form.items():
            rows_of.setdefault(a, []).append((b, v))
            cols_of.setdefault(b, []).append((a, v))
        for (j, k) in positions:
            col: dict[tuple[int, int], Fraction] = {}
            # X^T M: the transpose has ts[k][j] * x at (k, j); times M adds
            # ts[k][j] * M[j, c] at (k, c)
            for c, v in rows_of.get(j, ()):
                col[(k, c)] = col.get((k, c), Fraction(0)) + ts[k][j] * v
            # M X: column k receives M[:, j]
            for a, v in cols_of.get(j, ()):
                col[(a, k)] = col.get((a, k), Fraction(0)) + v
            cols.append({pos: v for pos, v in col.items() if v})
    touched = sorted({pos for col in cols for pos in col})
    row_index = {pos: i for i, pos in enumerate(touched)}
    grid = [[ZERO] * len(positions) for _ in touched]
    for t, col in enumerate(cols):
        for pos, v in col.items():
            grid[row_index[pos]][t] = Scalar(v)
    return touched, ExactMatrix(grid, cols=len(positions))


def build_basis(f: AlgebraFamily, validate: bool = True) -> GradedBasis:
    """Construct an ordered homogeneous basis of the family instance.

    The membership condition is solved degree by degree as an exact
    nullspace over the entry unknowns, which keeps every basis element
    homogeneous.  Elements are ordered by degree in the canonical order,
    then by the nullspace's free-parameter index; each is normalized so
    its first nonzero entry (row-major) is one.

    With validate=True the result is cross-checked against the literal
    block template of the family: spans must agree and every template
    instance must pass is_member.
    """
    sig = family_signature(f)
    n = len(sig)
    ts = sig.transpose_signs()
    form = _form_entries(f) if f.uses_form else None
    elements: list[GradedMatrix] = []
    for deg in DEGREES:
        positions = [
            (j, k)
            for j in range(n)
            for k in range(n)
            if sig.entry_degree(j, k) == deg
        ]
        if not positions:
            continue
        _, constraint = _condition_columns(f, sig, positions, ts, form)
        vectors = nullspace(constraint)
        for v in vectors:
            items = {
                positions[t]: v[t, 0] for t in range(len(positions)) if v[t, 0]
            }
            first = min(items)  # row-major order matches position order
            lead = items[first]
            if lead != ONE:
                inv = lead.inverse()
                items = {pos: val * inv for pos, val in items.items()}
            elements.append(GradedMatrix.from_entries(sig, items, deg))
    basis = GradedBasis(f, sig, elements)
    if validate:
        _cross_validate(f, basis)
    return basis


def _cross_validate(f: AlgebraFamily, basis: GradedBasis):
    template = block_template(f)
    instances = template_instances(f)
    for el in basis.elements:
        ok, why = satisfies_template(template, el)
        if not ok:
            raise FamilyConstructionError(
                f"{f.label()}: nullspace element violates the block template: {why}"
            )
    for inst in instances:
        if not is_member(f, inst):
            raise FamilyConstructionError(
                f"{f.label()}: template instance fails the membership condition"
            )
    flat_basis = [el.entries for el in basis.elements]
    flat_inst = [el.entries for el in instances]
    d_basis = span_dim(flat_basis)
    d_inst = span_dim(flat_inst)
    d_union = span_dim(flat_basis + flat_inst)
    if not (d_basis == len(basis.elements) == d_inst == d_union):
        raise FamilyConstructionError(
            f"{f.label()}: template span {d_inst} vs nullspace span {d_basis} "
            f"(union {d_union}, elements {len(basis.elements)})"
        )


# ---------------------------------------------------------------------------
# dimension profiles


def dimension_profile(f: AlgebraFamily) -> DimensionProfile:
    """Closed-form profile per family.

    The so-odd d00 expression is kept exactly as commonly stated even
    though it disagrees with the measured dimension once p >= 1 and
    n - p >= 2; dims reporting warns on the difference instead of fixing
    it here.
    """
    if f.kind in _SIG_KINDS:
        p, q, r, s = f.params
        if f.kind is FamilyKind.SO_GRADED:
            return DimensionProfile(
                (p * (p - 1) + q * (q - 1) + r * (r - 1) + s * (s - 1)) // 2,
                p * q + r * s,
                p * r + q * s,
                p * s + q * r,
            )
        d00 = p * p + q * q + r * r + s * s
        if f.kind is FamilyKind.SL:
            d00 -= 1
        return DimensionProfile(
            d00, 2 * p * q + 2 * r * s, 2 * p * r + 2 * q * s, 2 * q * r + 2 * p * s
        )
    n, p = f.params
    m = n - p
    if f.kind is FamilyKind.SP:
        return DimensionProfile(
            p * p + m * m, 2 * p * m, 2 * p * m, p * (p + 1) + m * (m + 1)
        )
    if f.kind is FamilyKind.SO_EVEN:
        return DimensionProfile(
            p * p + m * m, 2 * p * m, 2 * p * m, p * (p - 1) + m * (m - 1)
        )
    return DimensionProfile(
        2 * n * n - n - 4 * p * m * m, 2 * p, 2 * m, 4 * p * m
    )


def dimension_profile_measured(
    f: AlgebraFamily, basis: GradedBasis | None = None
) -> DimensionProfile:
    if basis is None:
        basis = build_basis(f)
    return basis.profile()


def classical_counterpart_dims(f: AlgebraFamily) -> int:
    """Total dimension of the ungraded algebra with the same defining
    condition (2n^2 + n for sp and so-odd, 2n^2 - n for so-even)."""
    if not f.uses_form:
        raise ValueError("classical counterpart is defined for the form families")
    n, _ = f.params
    if f.kind is FamilyKind.SO_EVEN:
        return 2 * n * n - n
    return 2 * n * n + n


# ---------------------------------------------------------------------------
# block templates


@dataclass(frozen=True)
class Block:
    """One block of a template grid.

    Free blocks carry a name and a symmetry constraint ("full", "sym",
    "antisym").  Linked blocks name the free block whose ordinary
    transpose they repeat, times a sign.  Zero blocks are fixed at zero.
    The degree label is the entry degree printed for the block.
    """

    degree: Degree
    name: str | None = None
    symmetry: str = "full"
    source: str | None = None
    sign: int = 1

    @property
    def is_free(self) -> bool:
        return self.name is not None

    @property
    def is_zero(self) -> bool:
        return self.name is None and self.source is None


@dataclass(frozen=True)
class BlockTemplate:
    """Literal block layout of one family: block sizes, degree labels,
    symmetry constraints and sign-linked transposed pairs, plus a global
    traceless flag for sl."""

    sizes: tuple[int, ...]
    grid: tuple[tuple[Block, ...], ...]
    traceless: bool = False

    @property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for s in self.sizes:
            out.append(out[-1] + s)
        return tuple(out)


def _sig_kind_grid(f: AlgebraFamily) -> BlockTemplate:
    degs = (D00, D01, D10, D11)
    grid = tuple(
        tuple(
            Block(degree=degs[i] + degs[j], name=f"m{i + 1}{j + 1}")
            for j in range(4)
        )
        for i in range(4)
    )
    return BlockTemplate(tuple(f.params), grid, traceless=f.kind is FamilyKind.SL)


def _so_graded_grid(f: AlgebraFamily) -> BlockTemplate:
    degs = (D00, D01, D10, D11)
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            deg = degs[i] + degs[j]
            if i == j:
                row.append(Block(degree=deg, name=f"m{i + 1}{j + 1}", symmetry="antisym"))
            elif i < j:
                row.append(Block(degree=deg, name=f"m{i + 1}{j + 1}"))
            else:
                sign = -1 if j == 0 else 1  # first block column is negated
                row.append(Block(degree=deg, source=f"m{j + 1}{i + 1}", sign=sign))
        rows.append(tuple(row))
    return BlockTemplate(tuple(f.params), tuple(rows))


def _sp_like_grid(f: AlgebraFamily) -> BlockTemplate:
    n, p = f.params
    m = n - p
    if f.kind is FamilyKind.SP:
        framed, diag_sym = -1, "sym"
    else:
        framed, diag_sym = 1, "antisym"
    F = lambda deg, name, sym="full": Block(degree=deg, name=name, symmetry=sym)
    L = lambda deg, src, sgn: Block(degree=deg, source=src, sign=sgn)
    grid = (
        (F(D00, "m11"), F(D10, "m12"), F(D11, "m13", diag_sym), F(D01, "m14")),
        (F(D10, "m21"), F(D00, "m22"), L(D01, "m14", framed), F(D11, "m24", diag_sym)),
        (F(D11, "m31", diag_sym), F(D01, "m32"), L(D00, "m11", -1), L(D10, "m21", -1)),
        (L(D01, "m32", framed), F(D11, "m42", diag_sym), L(D10, "m12", -1), L(D00, "m22", -1)),
    )
    return BlockTemplate((p, m, p, m), grid)


def _so_odd_grid(f: AlgebraFamily) -> BlockTemplate:
    n, p = f.params
    m = n - p
    F = lambda deg, name, sym="full": Block(degree=deg, name=name, symmetry=sym)
    L = lambda deg, src, sgn: Block(degree=deg, source=src, sign=sgn)
    Z = Block(degree=D00, symmetry="zero")
    grid = (
        (F(D00, "m11"), F(D11, "m12"), F(D00, "m13", "antisym"), F(D11, "m14"), F(D01, "m15")),
        (F(D11, "m21"), F(D00, "m22"), L(D11, "m14", 1), F(D00, "m24", "antisym"), F(D10, "m25")),
        (F(D00, "m31", "antisym"), F(D11, "m32"), L(D00, "m11", -1), L(D11, "m21", 1), F(D01, "m35")),
        (L(D11, "m32", 1), F(D00, "m42", "antisym"), L(D11, "m12", 1), L(D00, "m22", -1), F(D10, "m45")),
        # last row links cross the dashed blocks: col 1 <- block (3,5), col 3 <- block (1,5)
        (L(D01, "m35", -1), L(D10, "m45", -1), L(D01, "m15", -1), L(D10, "m25", -1), Z),
    )
    return BlockTemplate((p, m, p, m, 1), grid)


def block_template(f: AlgebraFamily) -> BlockTemplate:
    if f.kind in (FamilyKind.GL, FamilyKind.SL):
        return _sig_kind_grid(f)
    if f.kind is FamilyKind.SO_GRADED:
        return _so_graded_grid(f)
    if f.kind is FamilyKind.SO_ODD:
        return _so_odd_grid(f)
    return _sp_like_grid(f)


def _free_params(rows: int, cols: int, symmetry: str):
    """Independent parameter positions of one free block, in a fixed
    order; each yields the list of (row, col, value) entries to set."""
    if symmetry == "full":
        for u in range(rows):
            for v in range(cols):
                yield [(u, v, 1)]
    elif symmetry == "sym":
        for u in range(rows):
            for v in range(u, cols):
                if u == v:
                    yield [(u, u, 1)]
                else:
                    yield [(u, v, 1), (v, u, 1)]
    elif symmetry == "antisym":
        for u in range(rows):
            for v in range(u + 1, cols):
                yield [(u, v, 1), (v, u, -1)]
    else:
        raise ValueError(f"unknown symmetry {symmetry!r}")


def template_instances(f: AlgebraFamily) -> list[GradedMatrix]:
    """A spanning set generated literally from the block template."""
    sig = family_signature(f)
    template = block_template(f)
    if f.kind in (FamilyKind.GL, FamilyKind.SL):
        return _sig_kind_instances(f, sig)
    off = template.offsets
    # map free block name -> (block row, block col)
    where = {}
    links: dict[str, list[tuple[int, int, int]]] = {}
    for i, row in enumerate(template.grid):
        for j, blk in enumerate(row):
            if blk.is_free:
                where[blk.name] = (i, j)
                links.setdefault(blk.name, [])
            elif blk.source is not None:
                links.setdefault(blk.source, []).append((i, j, blk.sign))
    out = []
    for i, row in enumerate(template.grid):
        for j, blk in enumerate(row):
            if not blk.is_free:
                continue
            rows_, cols_ = template.sizes[i], template.sizes[j]
            for entries in _free_params(rows_, cols_, blk.symmetry):
                items: dict[tuple[int, int], Scalar] = {}
                for (u, v, val) in entries:
                    items[(off[i] + u, off[j] + v)] = Scalar(val)
                for (li, lj, sgn) in links[blk.name]:
                    for (u, v, val) in entries:
                        items[(off[li] + v, off[lj] + u)] = Scalar(sgn * val)
                out.append(GradedMatrix.from_entries(sig, items, degree="infer"))
    return out


def _sig_kind_instances(f: AlgebraFamily, sig: GradingSignature) -> list[GradedMatrix]:
    n = len(sig)
    out = []
    for j in range(n):
        for k in range(n):
            if j != k:
                out.append(GradedMatrix.unit(sig, j, k))
    if f.kind is FamilyKind.GL:
        for j in range(n):
            out.append(GradedMatrix.unit(sig, j, j))
    else:
        for j in range(n - 1):
            out.append(
                GradedMatrix.from_entries(
                    sig, {(j, j): ONE, (j + 1, j + 1): -ONE}, degree="infer"
                )
            )
    return out


def satisfies_template(
    template: BlockTemplate, A: GradedMatrix
) -> tuple[bool, str | None]:
    """Check one matrix against the literal block constraints."""
    off = template.offsets
    k = len(template.sizes)

    def sub(i, j):
        return [
            [A.entries[off[i] + u, off[j] + v] for v in range(template.sizes[j])]
            for u in range(template.sizes[i])
        ]

    blocks = {}
    for i in range(k):
        for j in range(k):
            blk = template.grid[i][j]
            if blk.is_free:
                blocks[blk.name] = (i, j, sub(i, j))
    for i in range(k):
        for j in range(k):
            blk = template.grid[i][j]
            cur = sub(i, j)
            if blk.is_free:
                if blk.symmetry == "sym":
                    for u in range(len(cur)):
                        for v in range(u):
                            if cur[u][v] != cur[v][u]:
                                return False, f"block ({i+1},{j+1}) is not symmetric"
                elif blk.symmetry == "antisym":
                    for u in range(len(cur)):
                        for v in range(u + 1):
                            if cur[u][v] != -cur[v][u]:
                                return False, f"block ({i+1},{j+1}) is not antisymmetric"
            elif blk.source is not None:
                _, _, src = blocks[blk.source]
                for u in range(len(cur)):
                    for v in range(len(cur[u]) if cur else 0):
                        want = src[v][u] if blk.sign > 0 else -src[v][u]
                        if cur[u][v] != want:
                            return False, (
                                f"block ({i+1},{j+1}) is not {blk.sign:+d} times the "
                                f"transpose of its source"
                            )
            else:
                for u, rw in enumerate(cur):
                    for v, val in enumerate(rw):
                        if val:
                            return False, f"block ({i+1},{j+1}) must vanish"
    if template.traceless and A.trace():
        return False, "trace must vanish"
    return True, None
