"""Z2 x Z2 degrees, sign rules, grading signatures and graded matrices.

A grading signature assigns one of the four degrees (0,0), (0,1), (1,0),
(1,1) to each coordinate of the underlying column space; the entry (j, k)
of a matrix then inherits the degree d_j + d_k (componentwise mod 2).  A
matrix is homogeneous of degree a when every nonzero entry sits at a
position of entry degree a.
"""

from __future__ import annotations

import enum
from typing import Iterator, Mapping

from .exactnum import ExactMatrix, ONE, Scalar, ZERO

__all__ = [
    "Degree",
    "DEGREES",
    "D00",
    "D01",
    "D10",
    "D11",
    "SignRule",
    "degree_sign",
    "GradingSignature",
    "permute_grading",
    "degree_permutations",
    "GradedMatrix",
    "entry_degree",
    "decompose",
    "graded_product",
    "graded_bracket",
    "graded_transpose",
    "trace",
]


class Degree:
    """An element (a1, a2) of Z2 x Z2."""

    __slots__ = ("a1", "a2")

    def __init__(self, a1: int, a2: int):
        if a1 not in (0, 1) or a2 not in (0, 1):
            raise ValueError(f"degree components must be bits, got ({a1}, {a2})")
        self.a1 = a1
        self.a2 = a2

    @property
    def code(self) -> int:
        """Index in the canonical order (0,0), (0,1), (1,0), (1,1)."""
        return 2 * self.a1 + self.a2

    @classmethod
    def from_code(cls, code: int) -> "Degree":
        if not 0 <= code <= 3:
            raise ValueError(f"degree code must be 0..3, got {code}")
        return DEGREES[code]

    def __add__(self, other: "Degree") -> "Degree":
        if not isinstance(other, Degree):
            return NotImplemented
        return DEGREES[self.code ^ other.code]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Degree):
            return NotImplemented
        return self.a1 == other.a1 and self.a2 == other.a2

    def __hash__(self) -> int:
        return hash((self.a1, self.a2))

    def __repr__(self) -> str:
        return f"({self.a1},{self.a2})"

    def to_json(self) -> list[int]:
        return [self.a1, self.a2]

    @classmethod
    def from_json(cls, obj) -> "Degree":
        if not (isinstance(obj, (list, tuple)) and len(obj) == 2):
            raise ValueError(f"not a degree: {obj!r}")
        return cls(int(obj[0]), int(obj[1]))


DEGREES = (Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1))
D00, D01, D10, D11 = DEGREES


class SignRule(enum.Enum):
    """Choice of the sign exponent a.b used by the graded bracket.

    GLA uses the antisymmetric form a1*b2 - a2*b1; GLSA uses the dot
    product a1*b1 + a2*b2.  Exponents are kept as plain integers and only
    their parity feeds the sign.
    """

    GLA = "gla"
    GLSA = "glsa"

    def exponent(self, a: Degree, b: Degree) -> int:
        if self is SignRule.GLA:
            return a.a1 * b.a2 - a.a2 * b.a1
        return a.a1 * b.a1 + a.a2 * b.a2

    def sign(self, a: Degree, b: Degree) -> int:
        return -1 if self.exponent(a, b) % 2 else 1


def degree_sign(a: Degree, b: Degree, rule: SignRule = SignRule.GLA) -> int:
    """The sign (-1)**(a.b) under the given rule."""
    return rule.sign(a, b)


class GradingSignature:
    """Assignment of a degree to each coordinate of the column space."""

    __slots__ = ("degrees",)

    def __init__(self, degrees):
        self.degrees = tuple(degrees)
        for d in self.degrees:
            if not isinstance(d, Degree):
                raise TypeError("signature entries must be Degrees")

    @classmethod
    def sorted_form(cls, p: int, q: int, r: int, s: int) -> "GradingSignature":
        """Signature with p coordinates of degree (0,0), then q of (0,1),
        r of (1,0) and s of (1,1)."""
        if min(p, q, r, s) < 0:
            raise ValueError("multiplicities must be nonnegative")
        return cls([D00] * p + [D01] * q + [D10] * r + [D11] * s)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[Degree]:
        return iter(self.degrees)

    def __getitem__(self, j: int) -> Degree:
        return self.degrees[j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradingSignature):
            return NotImplemented
        return self.degrees == other.degrees

    def __hash__(self) -> int:
        return hash(self.degrees)

    def __repr__(self) -> str:
        return f"GradingSignature({list(self.degrees)})"

    def entry_degree(self, j: int, k: int) -> Degree:
        n = len(self.degrees)
        if not (0 <= j < n and 0 <= k < n):
            raise IndexError(f"coordinate index out of range for size {n}: ({j}, {k})")
        return self.degrees[j] + self.degrees[k]

    def multiplicities(self) -> tuple[int, int, int, int]:
        """Counts of each degree in the canonical degree order."""
        counts = [0, 0, 0, 0]
        for d in self.degrees:
            counts[d.code] += 1
        return tuple(counts)

    def transpose_signs(self) -> tuple[tuple[int, ...], ...]:
        """Sign table ts with ts[j][k] = (-1)**((d_j + d_k) . d_j) under
        the GLA rule; the graded transpose places ts[j][k] * m[k][j] at
        position (j, k)."""
        n = len(self.degrees)
        return tuple(
            tuple(
                SignRule.GLA.sign(self.degrees[j] + self.degrees[k], self.degrees[j])
                for k in range(n)
            )
            for j in range(n)
        )

    def to_json(self) -> list[list[int]]:
        return [d.to_json() for d in self.degrees]

    @classmethod
    def from_json(cls, obj) -> "GradingSignature":
        return cls([Degree.from_json(d) for d in obj])


def permute_grading(
    sig: GradingSignature, pi: Mapping[Degree, Degree]
) -> GradingSignature:
    """Relabel the degrees of a signature by a permutation fixing (0,0).

    The three nonzero degrees may be permuted arbitrarily; any such
    relabeling is an automorphism of Z2 x Z2, so entry degrees transform
    coherently.
    """
    full = {D00: pi.get(D00, D00)}
    for d in (D01, D10, D11):
        full[d] = pi.get(d, d)
    if full[D00] != D00:
        raise ValueError("degree permutation must fix (0,0)")
    if set(full.values()) != set(DEGREES):
        raise ValueError("degree map is not a permutation")
    return GradingSignature([full[d] for d in sig])


def degree_permutations() -> list[dict[Degree, Degree]]:
    """All six permutations of the nonzero degrees (identity included)."""
    import itertools

    nonzero = (D01, D10, D11)
    out = []
    for perm in itertools.permutations(nonzero):
        out.append(dict(zip(nonzero, perm)))
    return out


class GradedMatrix:
    """A square exact matrix tied to a grading signature.

    ``degree`` declares the matrix homogeneous; the constructor verifies
    that every nonzero entry sits at a position of that entry degree.
    Value equality compares signature and entries only.
    """

    __slots__ = ("signature", "entries", "degree")

    def __init__(
        self,
        signature: GradingSignature,
        entries: ExactMatrix,
        degree: Degree | None = None,
    ):
        n = len(signature)
        if entries.rows != n or entries.cols != n:
            raise ValueError(
                f"entries are {entries.rows}x{entries.cols} but the signature "
                f"has {n} coordinates"
            )
        if degree is not None:
            for j, row in enumerate(entries.data):
                for k, v in enumerate(row):
                    if v and signature.entry_degree(j, k) != degree:
                        raise ValueError(
                            f"entry ({j}, {k}) has degree "
                            f"{signature.entry_degree(j, k)}, not {degree}"
                        )
        self.signature = signature
        self.entries = entries
        self.degree = degree

    @property
    def n(self) -> int:
        return len(self.signature)

    @classmethod
    def zero(cls, signature: GradingSignature) -> "GradedMatrix":
        n = len(signature)
        return cls(signature, ExactMatrix.zeros(n, n))

    @classmethod
    def identity(cls, signature: GradingSignature) -> "GradedMatrix":
        n = len(signature)
        return cls(signature, ExactMatrix.identity(n), D00)

    @classmethod
    def unit(
        cls, signature: GradingSignature, j: int, k: int, value=ONE
    ) -> "GradedMatrix":
        n = len(signature)
        return cls(
            signature,
            ExactMatrix.unit(n, n, j, k, value),
            signature.entry_degree(j, k),
        )

    @classmethod
    def from_entries(
        cls,
        signature: GradingSignature,
        items: Mapping[tuple[int, int], object],
        degree: Degree | str | None = None,
    ) -> "GradedMatrix":
        """Build from a sparse {(row, col): scalar} mapping.

        Pass degree="infer" to tag the result with the common entry degree
        of its nonzero entries (an error if they disagree; None if all
        entries vanish).
        """
        n = len(signature)
        grid = [[ZERO] * n for _ in range(n)]
        for (j, k), v in items.items():
            grid[j][k] = grid[j][k] + v
        mat = ExactMatrix(grid, cols=n)
        if degree == "infer":
            seen = {
                signature.entry_degree(j, k)
                for j, row in enumerate(mat.data)
                for k, v in enumerate(row)
                if v
            }
            if len(seen) > 1:
                raise ValueError(f"entries span several degrees: {sorted(map(str, seen))}")
            degree = seen.pop() if seen else None
        return cls(signature, mat, degree)

    def _check_signature(self, other: "GradedMatrix"):
        if self.signature != other.signature:
            raise ValueError("signature mismatch")

    def __add__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_signature(other)
        deg = self.degree if self.degree == other.degree else None
        return GradedMatrix(self.signature, self.entries + other.entries, deg)

    def __sub__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_signature(other)
        deg = self.degree if self.degree == other.degree else None
        return GradedMatrix(self.signature, self.entries - other.entries, deg)

    def __neg__(self) -> "GradedMatrix":
        return GradedMatrix(self.signature, -self.entries, self.degree)

    def scaled(self, k) -> "GradedMatrix":
        return GradedMatrix(self.signature, self.entries.scaled(k), self.degree)

    def __matmul__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check_signature(other)
        deg = None
        if self.degree is not None and other.degree is not None:
            deg = self.degree + other.degree
        return GradedMatrix(self.signature, self.entries @ other.entries, deg)

    def trace(self) -> Scalar:
        return self.entries.trace()

    def is_zero(self) -> bool:
        return self.entries.is_zero()

    def decompose(self) -> dict[Degree, "GradedMatrix"]:
        """Split into the four homogeneous components (zeros included)."""
        n = self.n
        grids = {d: [[ZERO] * n for _ in range(n)] for d in DEGREES}
        for j, row in enumerate(self.entries.data):
            for k, v in enumerate(row):
                if v:
                    grids[self.signature.entry_degree(j, k)][j][k] = v
        return {
            d: GradedMatrix(self.signature, ExactMatrix(grids[d], cols=n), d)
            for d in DEGREES
        }

    def bracket(self, other: "GradedMatrix", rule: SignRule = SignRule.GLA) -> "GradedMatrix":
        """Graded bracket x y - (-1)**(a.b) y x, extended bilinearly over
        homogeneous components when either input is inhomogeneous."""
        if not isinstance(other, GradedMatrix):
            raise TypeError("bracket needs two graded matrices")
        self._check_signature(other)
        if self.degree is not None and other.degree is not None:
            prod = self.entries @ other.entries
            back = other.entries @ self.entries
            if rule.sign(self.degree, other.degree) < 0:
                ent = prod + back
            else:
                ent = prod - back
            return GradedMatrix(self.signature, ent, self.degree + other.degree)
        total = GradedMatrix.zero(self.signature)
        for xa in self.decompose().values():
            if xa.is_zero():
                continue
            for yb in other.decompose().values():
                if yb.is_zero():
                    continue
                total = total + xa.bracket(yb, rule)
        return total

    def graded_transpose(self) -> "GradedMatrix":
        """Entrywise signed transpose: position (j, k) receives
        ts[j][k] * m[k][j] with the sign table of the signature."""
        n = self.n
        ts = self.signature.transpose_signs()
        data = self.entries.data
        out = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            tsj = ts[j]
            for k in range(n):
                v = data[k][j]
                if v:
                    out[j][k] = v if tsj[k] > 0 else -v
        return GradedMatrix(self.signature, ExactMatrix(out, cols=n), self.degree)

    def permuted_degrees(self, pi: Mapping[Degree, Degree]) -> "GradedMatrix":
        new_sig = permute_grading(self.signature, pi)
        deg = self.degree
        if deg is not None:
            full = {D00: D00}
            for d in (D01, D10, D11):
                full[d] = pi.get(d, d)
            deg = full[deg]
        return GradedMatrix(new_sig, self.entries, deg)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.signature == other.signature and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.signature, self.entries))

    def __repr__(self) -> str:
        return f"GradedMatrix(n={self.n}, degree={self.degree})"

    def to_json(self) -> dict:
        items = []
        for j, row in enumerate(self.entries.data):
            for k, v in enumerate(row):
                if v:
                    items.append([j, k, v.to_json()])
        return {
            "n": self.n,
            "signature": self.signature.to_json(),
            "degree": None if self.degree is None else self.degree.to_json(),
            "entries": items,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GradedMatrix":
        sig = GradingSignature.from_json(obj["signature"])
        n = int(obj["n"])
        if n != len(sig):
            raise ValueError("matrix size does not match its signature")
        grid = [[ZERO] * n for _ in range(n)]
        for j, k, val in obj["entries"]:
            grid[int(j)][int(k)] = Scalar.from_json(val)
        deg = obj.get("degree")
        return cls(
            sig,
            ExactMatrix(grid, cols=n),
            None if deg is None else Degree.from_json(deg),
        )


def entry_degree(sig: GradingSignature, j: int, k: int) -> Degree:
    return sig.entry_degree(j, k)


def decompose(m: GradedMatrix) -> dict[Degree, GradedMatrix]:
    return m.decompose()


def graded_product(x: GradedMatrix, y: GradedMatrix) -> GradedMatrix:
    return x @ y


def graded_bracket(
    x: GradedMatrix, y: GradedMatrix, rule: SignRule = SignRule.GLA
) -> GradedMatrix:
    return x.bracket(y, rule)


def graded_transpose(m: GradedMatrix) -> GradedMatrix:
    return m.graded_transpose()


def trace(m: GradedMatrix) -> Scalar:
    return m.trace()
