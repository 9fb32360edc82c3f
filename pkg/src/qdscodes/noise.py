"""Syndrome-measurement-error channel and p_se evaluation.

Noise model: gates are perfect and the only faults are independent
bit-flips on single-qubit measurement outcomes, each with probability
p_m.  A stabilizer element of Pauli weight w is read out through w
single-qubit measurements, so its syndrome bit flips with probability

    p_err(w, p_m) = sum over odd j of C(w, j) p_m^j (1 - p_m)^(w - j).

Because no data errors occur, the true syndrome is the all-zero word;
p_se is the probability that the recovered syndrome differs from it.  A
scheme is split into independently decoded parts (one per generator
type); the scheme fails when any part fails, and a part fails when its
decoder returns the wrong word or declares a tie.

Monte Carlo runs are reproducible bit-for-bit: trials are partitioned
into chunks of fixed size, and chunk c draws from
numpy.random.default_rng(SeedSequence(entropy=seed, spawn_key=(c,))),
i.e. PCG64 seeded through numpy's documented SeedSequence hash.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .codes import StabilizerCode, SubsystemCode, catalog
from .errors import CapacityError, PreconditionError, StructureError
from .gf4 import F4Vector
from .qds import measured_elements
from .smcodes import BinaryLinearCode, sm_catalog

AUTO_EXACT_BITS = 20
HARD_EXACT_BITS = 25
DEFAULT_CHUNK_SIZE = 1 << 16

COSET_LEADER = "coset-leader"
WEIGHTED_ML = "weighted-ml"
DECODERS = (COSET_LEADER, WEIGHTED_ML)


def p_err(w: int, p_m: float) -> float:
    """Probability that the syndrome bit of a weight-w element flips."""
    if w < 1:
        raise PreconditionError(f"element weight must be positive, got {w}")
    if not 0.0 <= p_m <= 1.0:
        raise PreconditionError(f"p_m={p_m} outside [0, 1]")
    return sum(
        math.comb(w, j) * p_m**j * (1.0 - p_m) ** (w - j) for j in range(1, w + 1, 2)
    )


@dataclass(frozen=True)
class RepetitionPart:
    """Each syndrome bit protected by its own fold-times repetition code,
    decoded by per-bit majority with even ties declared failures."""

    weights: tuple[int, ...]
    fold: int

    @property
    def total_measurements(self) -> int:
        return self.fold * sum(self.weights)


@dataclass(frozen=True)
class SMPart:
    """A block of measured elements protected by one SM code.

    weights[j] is the Pauli weight of measured element j in systematic
    order, so bit j flips with probability p_err(weights[j], p_m).
    """

    code: BinaryLinearCode
    weights: tuple[int, ...]
    decoder: str = COSET_LEADER

    def __post_init__(self):
        if len(self.weights) != self.code.length:
            raise StructureError("one weight per measured element is required")
        if self.decoder not in DECODERS:
            raise PreconditionError(f"decoder must be one of {DECODERS}, got {self.decoder!r}")

    @property
    def total_measurements(self) -> int:
        return sum(self.weights)


Part = RepetitionPart | SMPart


@dataclass(frozen=True)
class MeasurementScheme:
    name: str
    parts: tuple[Part, ...]

    @property
    def total_measurements(self) -> int:
        return sum(p.total_measurements for p in self.parts)


@dataclass(frozen=True)
class SimResult:
    p_se: float
    stderr: float
    trials: int
    method: str
    seed: int | None = None


# ----------------------------------------------------------------------
# exact evaluation
# ----------------------------------------------------------------------

def _majority_bit_failure(q: float, fold: int) -> float:
    """P[majority wrong or tied] for one bit under iid flips q."""
    fail = sum(
        math.comb(fold, c) * q**c * (1.0 - q) ** (fold - c)
        for c in range((fold // 2) + 1, fold + 1)
    )
    if fold % 2 == 0:
        c = fold // 2
        fail += math.comb(fold, c) * q**c * (1.0 - q) ** (fold - c)
    return fail


def _repetition_success(part: RepetitionPart, p_m: float) -> float:
    out = 1.0
    for w in part.weights:
        out *= 1.0 - _majority_bit_failure(p_err(w, p_m), part.fold)
    return out


def _flip_probs(part: SMPart, p_m: float) -> np.ndarray:
    return np.array([p_err(w, p_m) for w in part.weights])


def _class_masks(q: np.ndarray) -> tuple[list[int], np.ndarray]:
    """Group bit positions with identical flip probability.

    Costs are per-class counts dotted with the class log-likelihood
    ratios, in a fixed class order, so equal count vectors always produce
    bitwise-equal floats and exact ties are detected reliably.
    """
    masks: list[int] = []
    lams: list[float] = []
    index: dict[float, int] = {}
    for j, p in enumerate(q.tolist()):
        if p not in index:
            index[p] = len(masks)
            masks.append(0)
            if p == 0.0:
                lams.append(math.inf)
            elif p == 1.0:
                lams.append(-math.inf)
            else:
                lams.append(math.log((1.0 - p) / p))
        masks[index[p]] |= 1 << j
    return masks, np.array(lams)


def _class_costs(words: np.ndarray, masks: list[int], lams: np.ndarray) -> np.ndarray:
    counts = np.empty((len(words), len(masks)))
    for k, mask in enumerate(masks):
        counts[:, k] = np.bitwise_count(words & np.uint32(mask))
    return counts @ lams


def _word_probabilities(words: np.ndarray, q: np.ndarray) -> np.ndarray:
    out = np.ones(len(words))
    for j, p in enumerate(q.tolist()):
        bit = (words >> np.uint32(j)) & 1
        out *= np.where(bit == 1, p, 1.0 - p)
    return out


def _sm_success_exact(part: SMPart, p_m: float) -> float:
    """Probability mass of error patterns the decoder corrects to zero."""
    nbits = part.code.length
    if nbits > HARD_EXACT_BITS:
        raise CapacityError(
            f"exact enumeration over 2^{nbits} patterns exceeds the 2^{HARD_EXACT_BITS} cap"
        )
    q = _flip_probs(part, p_m)
    if part.decoder == COSET_LEADER:
        leader, _, mult = part.code.coset_table
        unique_leaders = leader[mult == 1]
        return float(np.sum(_word_probabilities(unique_leaders, q)))
    # weighted ML: the zero codeword must strictly beat every other codeword
    words = np.arange(1 << nbits, dtype=np.uint32)
    masks, lams = _class_masks(q)
    costs = _class_costs(words, masks, lams)
    success = np.ones(len(words), dtype=bool)
    for c in part.code.codewords():
        if c == 0:
            continue
        success &= costs < costs[words ^ np.uint32(c)]
    return float(np.sum(_word_probabilities(words[success], q)))


def part_success_exact(part: Part, p_m: float) -> float:
    if isinstance(part, RepetitionPart):
        return _repetition_success(part, p_m)
    return _sm_success_exact(part, p_m)


def pse_exact(scheme: MeasurementScheme, p_m: float) -> SimResult:
    """Exact p_se: one minus the product of the parts' success probabilities."""
    ok = 1.0
    for part in scheme.parts:
        ok *= part_success_exact(part, p_m)
    return SimResult(p_se=1.0 - ok, stderr=0.0, trials=0, method="exact")


# ----------------------------------------------------------------------
# Monte Carlo
# ----------------------------------------------------------------------

def _chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,)))


def _repetition_failures(part: RepetitionPart, p_m: float, rng, size: int) -> np.ndarray:
    failed = np.zeros(size, dtype=bool)
    for w in part.weights:
        counts = rng.binomial(part.fold, p_err(w, p_m), size=size)
        if part.fold % 2 == 0:
            failed |= 2 * counts >= part.fold
        else:
            failed |= 2 * counts > part.fold
    return failed


def _sm_failures(part: SMPart, p_m: float, rng, size: int) -> np.ndarray:
    q = _flip_probs(part, p_m)
    uniform = rng.random((size, part.code.length))
    bits = uniform < q
    words = np.zeros(size, dtype=np.uint32)
    for j in range(part.code.length):
        words |= bits[:, j].astype(np.uint32) << np.uint32(j)
    if part.decoder == COSET_LEADER:
        leader, _, mult = part.code.coset_table
        synd = np.zeros(size, dtype=np.uint32)
        for j, h in enumerate(part.code.parity_checks):
            synd |= (np.bitwise_count(words & np.uint32(h)) & 1).astype(np.uint32) << np.uint32(j)
        success = (mult[synd] == 1) & (words == leader[synd])
        return ~success
    masks, lams = _class_masks(q)
    costs = _class_costs(words, masks, lams)
    success = np.ones(size, dtype=bool)
    for c in part.code.codewords():
        if c == 0:
            continue
        success &= costs < _class_costs(words ^ np.uint32(c), masks, lams)
    return ~success


def pse_monte_carlo(
    scheme: MeasurementScheme,
    p_m: float,
    trials: int,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> SimResult:
    """Sampled p_se; deterministic for fixed (seed, trials, chunk_size)."""
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    failures = 0
    done = 0
    for chunk_index in itertools.count():
        if done >= trials:
            break
        size = min(chunk_size, trials - done)
        rng = _chunk_rng(seed, chunk_index)
        failed = np.zeros(size, dtype=bool)
        for part in scheme.parts:
            if isinstance(part, RepetitionPart):
                failed |= _repetition_failures(part, p_m, rng, size)
            else:
                failed |= _sm_failures(part, p_m, rng, size)
        failures += int(np.sum(failed))
        done += size
    p_hat = failures / trials
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / trials)
    return SimResult(p_se=p_hat, stderr=stderr, trials=trials, method="monte-carlo", seed=seed)


# ----------------------------------------------------------------------
# sweeps
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    log2_pm: float
    log2_pse: float
    stderr: float
    trials: int
    total_measurements: int
    scheme: str
    method: str


CSV_HEADER = ("log2_pm", "log2_pse", "stderr", "trials", "total_measurements", "scheme", "method")


def exact_is_feasible(scheme: MeasurementScheme, auto_bits: int = AUTO_EXACT_BITS) -> bool:
    return all(
        isinstance(p, RepetitionPart) or p.code.length <= auto_bits for p in scheme.parts
    )


def sweep(
    scheme: MeasurementScheme,
    pm_log2_grid: Sequence[float],
    method: str = "auto",
    trials: int = 10**6,
    seed: int = 0,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> list[SweepRow]:
    """Evaluate p_se over a grid of log2(p_m) values, in grid order.

    method "auto" uses exact evaluation when every SM part enumerates at
    most 2^20 patterns and Monte Carlo otherwise.
    """
    if not len(pm_log2_grid):
        raise PreconditionError("empty p_m grid")
    if method not in ("auto", "exact", "mc"):
        raise PreconditionError(f"method must be auto, exact, or mc, got {method!r}")
    if method == "auto":
        method = "exact" if exact_is_feasible(scheme) else "mc"
    rows = []
    for lp in pm_log2_grid:
        p_m = 2.0**lp
        if method == "exact":
            result = pse_exact(scheme, p_m)
        else:
            result = pse_monte_carlo(scheme, p_m, trials, seed, chunk_size)
        log2_pse = math.log2(result.p_se) if result.p_se > 0 else -math.inf
        rows.append(
            SweepRow(
                log2_pm=lp,
                log2_pse=log2_pse,
                stderr=result.stderr,
                trials=result.trials,
                total_measurements=scheme.total_measurements,
                scheme=scheme.name,
                method=result.method,
            )
        )
    return rows


def sweep_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [f"{r.log2_pm:.10g}", f"{r.log2_pse:.10g}", f"{r.stderr:.6g}",
             r.trials, r.total_measurements, r.scheme, r.method]
        )
    return buf.getvalue()


def write_sweep_csv(rows: Iterable[SweepRow], path: str | Path) -> None:
    Path(path).write_text(sweep_csv(rows))


# ----------------------------------------------------------------------
# scheme builders
# ----------------------------------------------------------------------

def split_rows_by_type(rows: Sequence[F4Vector]) -> tuple[list[F4Vector], list[F4Vector]]:
    """Partition generators into X-type and Z-type rows."""
    x_rows, z_rows = [], []
    for row in rows:
        if row.z == 0:
            x_rows.append(row)
        elif row.x == 0:
            z_rows.append(row)
        else:
            raise StructureError(
                f"row {row} mixes X and Z components; per-type SM protection needs CSS-type rows"
            )
    return x_rows, z_rows


def _apply_order(rows: Sequence[F4Vector], order: Sequence[int] | None) -> list[F4Vector]:
    if order is None:
        return list(rows)
    if sorted(order) != list(range(len(rows))):
        raise PreconditionError(f"generator order must permute range({len(rows)})")
    return [rows[i] for i in order]


def repetition_scheme(
    code: StabilizerCode | SubsystemCode, fold: int, name: str = ""
) -> MeasurementScheme:
    if fold < 1:
        raise PreconditionError(f"fold must be >= 1, got {fold}")
    weights = tuple(r.weight for r in code.rows)
    return MeasurementScheme(name or f"repetition-{fold}", (RepetitionPart(weights, fold),))


def _sm_part(rows: Sequence[F4Vector], sm: BinaryLinearCode, decoder: str) -> SMPart:
    elements = measured_elements(rows, sm)
    return SMPart(code=sm, weights=tuple(v.weight for v in elements), decoder=decoder)


def sm_scheme(
    code: StabilizerCode | SubsystemCode,
    sm_x: BinaryLinearCode,
    sm_z: BinaryLinearCode,
    decoder: str = COSET_LEADER,
    x_order: Sequence[int] | None = None,
    z_order: Sequence[int] | None = None,
    name: str = "",
) -> MeasurementScheme:
    """Protect the X-type and Z-type syndromes with separate SM codes.

    The generator orders matter: permuting the rows changes which
    stabilizer products are measured and hence the measurement total.
    """
    x_rows, z_rows = split_rows_by_type(code.rows)
    parts = (
        _sm_part(_apply_order(x_rows, x_order), sm_x, decoder),
        _sm_part(_apply_order(z_rows, z_order), sm_z, decoder),
    )
    return MeasurementScheme(name or "sm-scheme", parts)


def _shor_z_order_for_total(
    sm: BinaryLinearCode, z_rows: Sequence[F4Vector], target: int
) -> tuple[int, ...]:
    """First generator permutation (lexicographic) whose measured Z elements
    have Pauli weights summing to the target."""
    for perm in itertools.permutations(range(len(z_rows))):
        elements = measured_elements([z_rows[i] for i in perm], sm)
        if sum(v.weight for v in elements) == target:
            return perm
    raise StructureError(
        f"no generator permutation reaches {target} total Z measurements with SM code {sm.name}"
    )


FIG1_SCHEMES = ("fig1-shor-6fold", "fig1-shor-sm", "fig1-bs-6fold", "fig1-bs-sm")
FIG2_SCHEMES = ("fig2-shor-204", "fig2-shor-216", "fig2-bs-204", "fig2-bs-216")

# documented Z-measurement totals for the two generator permutations used
# with the imported [25,6,11] SM code
FIG2_SHOR_Z_TOTALS = {"fig2-shor-204": 102, "fig2-shor-216": 108}
FIG2_X_CODES = {
    "fig2-shor-204": "cw-17-2-11",
    "fig2-shor-216": "cw-18-2-12",
    "fig2-bs-204": "cw-17-2-11",
    "fig2-bs-216": "cw-18-2-12",
}


def build_scheme(
    name: str,
    data_dir: str | Path | None = None,
    decoder: str = COSET_LEADER,
    z_order: Sequence[int] | None = None,
) -> MeasurementScheme:
    """Construct one of the named figure schemes.

    Schemes whose SM codes are import-only raise AvailabilityError naming
    the required file when the data directory does not provide it.
    """
    if name == "fig1-shor-6fold":
        return repetition_scheme(catalog("shor"), 6, name)
    if name == "fig1-bs-6fold":
        return repetition_scheme(catalog("bacon-shor"), 6, name)
    if name == "fig1-shor-sm":
        return sm_scheme(
            catalog("shor"),
            sm_catalog("cw-12-2-8"),
            sm_catalog("grassl-18-6-8", data_dir),
            decoder,
            z_order=z_order,
            name=name,
        )
    if name == "fig1-bs-sm":
        return sm_scheme(
            catalog("bacon-shor"),
            sm_catalog("cw-12-2-8"),
            sm_catalog("cw-12-2-8"),
            decoder,
            name=name,
        )
    if name in ("fig2-bs-204", "fig2-bs-216"):
        cw = sm_catalog(FIG2_X_CODES[name])
        return sm_scheme(catalog("bacon-shor"), cw, cw, decoder, name=name)
    if name in ("fig2-shor-204", "fig2-shor-216"):
        shor = catalog("shor")
        sm_z = sm_catalog("grassl-25-6-11", data_dir)
        if z_order is None:
            _, z_rows = split_rows_by_type(shor.rows)
            z_order = _shor_z_order_for_total(sm_z, z_rows, FIG2_SHOR_Z_TOTALS[name])
        return sm_scheme(
            shor, sm_catalog(FIG2_X_CODES[name]), sm_z, decoder, z_order=z_order, name=name
        )
    raise PreconditionError(
        f"unknown scheme {name!r}; known: {', '.join(FIG1_SCHEMES + FIG2_SCHEMES)}"
    )


def figure1_schemes(
    data_dir: str | Path | None = None, decoder: str = COSET_LEADER
) -> dict[str, MeasurementScheme]:
    return {name: build_scheme(name, data_dir, decoder) for name in FIG1_SCHEMES}


def figure2_schemes(
    data_dir: str | Path | None = None, decoder: str = COSET_LEADER
) -> dict[str, MeasurementScheme]:
    return {name: build_scheme(name, data_dir, decoder) for name in FIG2_SCHEMES}
