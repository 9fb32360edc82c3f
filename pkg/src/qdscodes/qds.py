"""Quantum data-syndrome code assembly, verification, and constructions.

A QDS code pairs a stabilizer or subsystem code with a binary SM code.
The measured elements are the stabilizer generators followed by the
products selected by the SM code's redundant columns; measuring them
never collapses the encoded state because every one lies in the
stabilizer span.

Distances are computed through the characterization that the dual of the
joint code is exactly {(e, extended_syndrome(e)) : e in F4^n}; the
acceptance suite verifies this against a brute-force dual enumeration on
small instances.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .codes import (
    MAX_SEARCH_WEIGHT,
    AdditiveCode,
    StabilizerCode,
    SubsystemCode,
    errors_of_weight,
    is_impure,
    make_stabilizer,
    min_distance,
)
from .errors import (
    CapacityError,
    ConstructionFailureError,
    DimensionError,
    ParseError,
    PreconditionError,
    StructureError,
)
from .f2 import Basis, bit_reversed
from .gf4 import BitVector, F4Vector, syndrome, trace_inner_product
from .smcodes import BinaryLinearCode, sm_catalog


@dataclass(frozen=True)
class QDSParams:
    """Parameters in the [[n,k,d:l]] / [[n,k,r,d:l]] notation."""

    n: int
    k: int
    r: int
    d: int
    l: int

    def __str__(self) -> str:
        if self.r:
            return f"[[{self.n},{self.k},{self.r},{self.d}:{self.l}]]"
        return f"[[{self.n},{self.k},{self.d}:{self.l}]]"


@dataclass(frozen=True)
class QDSCode:
    """A base code plus an SM code over its measured generators."""

    base: StabilizerCode | SubsystemCode
    sm: BinaryLinearCode
    measured: tuple[F4Vector, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        """Number of protected generators (m - r for subsystem bases)."""
        return len(self.base.rows)

    @property
    def l(self) -> int:
        return self.sm.redundancy

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(v.weight for v in self.measured)


def measured_elements(rows: Sequence[F4Vector], sm: BinaryLinearCode) -> tuple[F4Vector, ...]:
    """The stabilizer rows followed by the SM code's redundant products
    b_j = sum_i a_{i,j} g_i, in systematic measurement order."""
    if sm.dim != len(rows):
        raise DimensionError(
            f"SM code dimension {sm.dim} != number of measured generators {len(rows)}"
        )
    out = list(rows)
    for j in range(sm.redundancy):
        mask = sm.a_column(j)
        b = F4Vector.zero(rows[0].n)
        for i in range(sm.dim):
            if (mask >> i) & 1:
                b = b + rows[i]
        out.append(b)
    return tuple(out)


def build_qds(base: StabilizerCode | SubsystemCode, sm: BinaryLinearCode) -> QDSCode:
    measured = measured_elements(base.rows, sm)
    stab_basis = Basis(r.bit_expansion() for r in base.rows)
    for b in measured:
        if not stab_basis.contains(b.bit_expansion()):
            raise StructureError(f"measured element {b} is not a stabilizer element")
    return QDSCode(base, sm, measured)


def extended_syndrome(qds: QDSCode, e: F4Vector) -> BitVector:
    """Bit j = measured[j] * e; equals (s, s . A) for the base syndrome s."""
    if e.n != qds.n:
        raise DimensionError(f"error length {e.n} != code length {qds.n}")
    bits = 0
    for j, g in enumerate(qds.measured):
        bits |= trace_inner_product(g, e) << j
    return BitVector(len(qds.measured), bits)


def qds_min_distance(qds: QDSCode, max_weight: int = MAX_SEARCH_WEIGHT) -> int:
    """min over e outside C (outside D for subsystem bases) of
    weight(e) + weight(extended_syndrome(e)).

    Enumerates e by increasing weight with the running minimum as cutoff;
    the dual characterization makes an explicit dual basis unnecessary.
    """
    excluded = qds.base.gauge if isinstance(qds.base, SubsystemCode) else qds.base.code
    basis = excluded.basis()
    best = None
    for w in range(0, max_weight + 1):
        if best is not None and w >= best:
            return best
        for e in errors_of_weight(qds.n, w):
            if basis.contains(e.bit_expansion()):
                continue
            total = w + extended_syndrome(qds, e).weight
            if best is None or total < best:
                best = total
    if best is None:
        raise CapacityError(f"no excluded vector of weight <= {max_weight} found")
    return best


def qds_params(qds: QDSCode, max_weight: int = MAX_SEARCH_WEIGHT) -> QDSParams:
    base = qds.base
    r = base.r if isinstance(base, SubsystemCode) else 0
    return QDSParams(base.n, base.k, r, qds_min_distance(qds, max_weight), qds.l)


def identity_qds(base: StabilizerCode | SubsystemCode) -> QDSCode:
    """The l = 0 assembly: measure exactly the stabilizer generators."""
    return build_qds(base, sm_catalog(f"identity-{len(base.rows)}"))


def augment_parity(base: StabilizerCode | SubsystemCode) -> QDSCode:
    """Attach the [m+1, m, 2] parity SM code to a distance-3 code.

    The extra measured element is the product of all stabilizer
    generators, which acts as a parity bit for the syndrome; the result is
    an [[n,k,3:1]] (or [[n,k,r,3:1]]) QDS code.
    """
    d = min_distance(base)
    if d != 3:
        raise PreconditionError(f"parity augmentation needs a distance-3 base, got d={d}")
    qds = build_qds(base, sm_catalog(f"parity-{len(base.rows)}"))
    if qds_min_distance(qds) < 3:
        raise StructureError("parity augmentation failed to preserve distance 3")
    return qds


# ----------------------------------------------------------------------
# Lemma-1 equivalence moves
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Permute:
    perm: tuple[int, ...]


@dataclass(frozen=True)
class Scale:
    coord: int
    scalar: int  # OMEGA or OMEGA2

    def __post_init__(self):
        if self.scalar not in (2, 3):
            raise ParseError(f"scale factor must be omega (2) or omega^2 (3), got {self.scalar}")


@dataclass(frozen=True)
class Conjugate:
    coord: int


Move = Permute | Scale | Conjugate


def equivalence_apply(rows: Iterable[F4Vector], move: Move) -> tuple[F4Vector, ...]:
    """Apply one local-equivalence move to every row.

    Coordinate permutations, single-coordinate nonzero scalings, and
    single-coordinate conjugations each permute or relabel the multiset of
    single-symbol-error syndromes, so they preserve the QDS property.
    """
    rows = tuple(rows)
    if isinstance(move, Permute):
        return tuple(r.permute(move.perm) for r in rows)
    n = rows[0].n
    if not 0 <= move.coord < n:
        raise DimensionError(f"coordinate {move.coord} outside [0, {n})")
    if isinstance(move, Scale):
        return tuple(r.scale_at(move.coord, move.scalar) for r in rows)
    return tuple(r.conjugate_at(move.coord) for r in rows)


def single_symbol_errors(n: int) -> list[F4Vector]:
    """The 3n errors acting as one nonzero symbol on one coordinate."""
    return [F4Vector.single(n, j, v) for j in range(n) for v in (1, 2, 3)]


# ----------------------------------------------------------------------
# generator search: impure distance-3 codes as zero-redundancy QDS codes
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ImpureSearchResult:
    rows: tuple[F4Vector, ...]
    pivot: F4Vector
    modifier: BitVector
    pivots_tried: int
    strings_examined: int


def _low_weight_span_elements(code: AdditiveCode, max_weight: int = 2) -> list[F4Vector]:
    elems = [v for v in code.span() if 0 < v.weight <= max_weight]
    elems.sort(key=lambda v: (v.weight, v.symbols()))
    return elems


def _even_weight_strings(m: int) -> Iterable[int]:
    """Even-weight bitstrings of length m, increasing weight, lexicographic
    (position 0 most significant) within each weight."""
    for w in range(0, m + 1, 2):
        masks = [sum(1 << i for i in support) for support in itertools.combinations(range(m), w)]
        yield from sorted(masks, key=lambda a: bit_reversed(a, m))


def impure_zero_redundancy(base: StabilizerCode) -> ImpureSearchResult:
    """Find generators making an impure [[n,k,3]] code an [[n,k,3:0]] QDS code.

    For each weight-<=2 stabilizer element g1 (minimal weight first), a row
    basis starting with g1 is formed, g1's row is replaced by the product
    of all rows, and g1 is added to the row subsets named by even-weight
    strings until every single-symbol error keeps an extended syndrome of
    weight >= 2 (>= 3 on the odd-parity side) unless it lies in the
    stabilizer itself.  The accepted row set is re-verified as a distance-3
    zero-redundancy QDS code before it is returned.
    """
    d = min_distance(base)
    if d != 3:
        raise PreconditionError(f"construction needs a distance-3 code, got d={d}")
    if not is_impure(base, d):
        raise PreconditionError("code is pure: no stabilizer element of weight < 3")
    m, n = base.m, base.n
    errors = single_symbol_errors(n)
    stab_basis = base.code.basis()
    pivots = _low_weight_span_elements(base.code)
    strings_examined = 0
    for pivot_index, g1 in enumerate(pivots, start=1):
        # complete g1 to a basis of the span using the original rows
        basis_rows = [g1]
        tracker = Basis([g1.bit_expansion()])
        for row in base.rows:
            if tracker.add(row.bit_expansion()):
                basis_rows.append(row)
        if len(basis_rows) != m:
            continue  # cannot happen for independent inputs; defensive
        total = basis_rows[0]
        for row in basis_rows[1:]:
            total = total + row
        new_rows = [total] + basis_rows[1:]
        anticommuting = [e for e in errors if trace_inner_product(g1, e)]
        commuting = [e for e in errors if not trace_inner_product(g1, e)]
        base_synd = {e: syndrome(new_rows, e) for e in errors}
        # adding g1 to the rows named by a XORs a onto anticommuting syndromes
        for a in _even_weight_strings(m):
            strings_examined += 1
            ok = all((base_synd[e].bits ^ a).bit_count() >= 3 for e in anticommuting) and all(
                base_synd[e].weight >= 2 or stab_basis.contains(e.bit_expansion())
                for e in commuting
            )
            if not ok:
                continue
            candidate = [
                row + g1 if (a >> i) & 1 else row for i, row in enumerate(new_rows)
            ]
            result = make_stabilizer(candidate)
            if qds_min_distance(identity_qds(result)) != 3:
                continue
            if not all(stab_basis.contains(row.bit_expansion()) for row in candidate):
                raise StructureError("row operations changed the stabilizer span")
            return ImpureSearchResult(
                tuple(candidate),
                pivot=g1,
                modifier=BitVector(m, a),
                pivots_tried=pivot_index,
                strings_examined=strings_examined,
            )
    raise ConstructionFailureError(
        "no generator choice found; the construction guarantees one exists "
        "for impure distance-3 codes, so this indicates a defect"
    )
