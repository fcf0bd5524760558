"""Monte Carlo sampling runs: CSV emission, manifests, and curve tables.

Sample CSV layout: ``family,c,s,gap_a,gap_b,chsh,region`` followed by the
family parameters (``param_*`` columns).  For the parametric families the
parameters are the generating tuple; for ``separable`` and ``full_rank`` they
are the 32 real/imaginary parts of the density matrix itself (row-major), so
every row is recomputable from its parameter columns alone.  Floats are
written with 17 significant digits ('.' decimal separator, LF line endings),
which round-trips doubles exactly.

Reproducibility: a run is keyed by ``(family, n, seed, streams)``.  Records
are drawn per stream from ``RngStream(seed, stream_index)`` with a fixed
even partition of ``n`` and written in stream order, so repeated runs are
byte-identical.  The sidecar manifest stores the key, the sampler id,
the library version, and the SHA-256 of the CSV body (timestamp excluded).
"""

import concurrent.futures
import hashlib
import json
import os
from dataclasses import asdict, dataclass
from datetime import datetime, timezone

import numpy as np

from . import batches
from .families import (
    SAMPLER_ID,
    RngStream,
    sample_e0_params,
    sample_e1_params,
    sample_full_rank_mats,
    sample_separable_mats,
)
from .plane import _CODE_TO_LABEL, RegionLabel, classify_entropic_array, frontier_mems, s_l1, s_l_minus, s_l_plus

FAMILIES = ("e0", "e1", "separable", "full_rank")

_MATRIX_PARAM_COLS = [f"param_m{i}{j}_{part}" for i in range(4) for j in range(4) for part in ("re", "im")]

PARAM_COLUMNS = {
    "e0": ["param_a", "param_b", "param_c", "param_theta"],
    "e1": ["param_a", "param_b", "param_f", "param_c", "param_d", "param_theta", "param_phi"],
    "separable": _MATRIX_PARAM_COLS,
    "full_rank": _MATRIX_PARAM_COLS,
}

BASE_COLUMNS = ["family", "c", "s", "gap_a", "gap_b", "chsh", "region"]


@dataclass(frozen=True)
class SampleRecord:
    """One sampled state with its plane coordinates and test results."""

    family: str
    params: tuple
    c: float
    s: float
    gap_a: float
    gap_b: float
    chsh: float
    region: RegionLabel


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to reproduce a sampling run bit for bit.

    The ``created`` timestamp is informational and excluded from the hash.
    """

    family: str
    n: int
    seed: int
    streams: int
    sampler_id: str
    version: str
    columns: tuple
    csv_sha256: str
    created: str

    def to_json(self) -> str:
        d = asdict(self)
        d["columns"] = list(d["columns"])
        return json.dumps(d, indent=2) + "\n"


def stream_counts(n: int, streams: int) -> list[int]:
    """Even partition of ``n`` records over ``streams`` worker streams."""
    if streams < 1:
        raise ValueError("streams must be >= 1")
    base, extra = divmod(int(n), int(streams))
    return [base + (1 if i < extra else 0) for i in range(streams)]


def _chunk_arrays(family: str, seed: int, stream_index: int, count: int):
    """Compute one stream's records as a dict of column arrays."""
    rng = RngStream(seed, stream_index)
    if family == "e0":
        a, b, c, theta = sample_e0_params(rng, count)
        mats = batches.build_e0_mats(a, b, c, theta)
        conc = batches.concurrence_x_batch(
            np.stack([np.zeros_like(a), a, b, 1.0 - a - b], axis=1), np.zeros_like(a), mats[:, 1, 2]
        )
        params = [a, b, c, theta]
    elif family == "e1":
        a, b, f, c, d, theta, phi = sample_e1_params(rng, count)
        mats = batches.build_e1_mats(a, b, f, c, d, theta, phi)
        conc = batches.concurrence_x_batch(
            np.stack([f, a, b, 1.0 - a - b - f], axis=1), mats[:, 0, 3], mats[:, 1, 2]
        )
        params = [a, b, f, c, d, theta, phi]
    elif family in ("separable", "full_rank"):
        draw = sample_separable_mats if family == "separable" else sample_full_rank_mats
        mats = draw(rng, count)
        conc = batches.concurrence_wootters_batch(mats)
        params = [comp for i in range(4) for j in range(4) for comp in (mats[:, i, j].real, mats[:, i, j].imag)]
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    s = batches.linear_entropy_batch(mats)
    gap_a, gap_b = batches.gaps_batch(mats)
    chsh = batches.chsh_batch(mats)
    region = classify_entropic_array(np.clip(conc, 0.0, 1.0), np.clip(s, 0.0, 1.0))
    return {"c": conc, "s": s, "gap_a": gap_a, "gap_b": gap_b, "chsh": chsh, "region": region, "params": params}


def _format_chunk(family: str, chunk: dict) -> str:
    cols = [chunk["c"], chunk["s"], chunk["gap_a"], chunk["gap_b"], chunk["chsh"]]
    labels = [_CODE_TO_LABEL[i].value for i in chunk["region"]]
    params = chunk["params"]
    lines = []
    for i in range(len(labels)):
        nums = ",".join(f"{col[i]:.17g}" for col in cols)
        pstr = ",".join(f"{p[i]:.17g}" for p in params)
        lines.append(f"{family},{nums},{labels[i]},{pstr}")
    return "\n".join(lines) + ("\n" if lines else "")


def run_sampling(family: str, n: int, seed: int, streams: int = 1, out_path=None, workers: int | None = None):
    """Sample ``n`` states and write the CSV and its manifest.

    Returns the :class:`RunManifest`.  ``workers`` (default: the
    ``ENTROPLANE_WORKERS`` environment variable, else 1) bounds the number of
    stream chunks processed concurrently; output order is by stream index
    regardless, so the bytes written do not depend on the worker count.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if workers is None:
        workers = int(os.environ.get("ENTROPLANE_WORKERS", "1"))
    counts = stream_counts(n, streams)
    header = ",".join(BASE_COLUMNS + PARAM_COLUMNS[family]) + "\n"

    def job(i):
        return _format_chunk(family, _chunk_arrays(family, seed, i, counts[i]))

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            bodies = list(pool.map(job, range(streams)))
    else:
        bodies = [job(i) for i in range(streams)]

    payload = header + "".join(bodies)
    digest = hashlib.sha256(payload.encode("ascii")).hexdigest()
    manifest = RunManifest(
        family=family,
        n=int(n),
        seed=int(seed),
        streams=int(streams),
        sampler_id=SAMPLER_ID,
        version=_version(),
        columns=tuple(BASE_COLUMNS + PARAM_COLUMNS[family]),
        csv_sha256=digest,
        created=datetime.now(timezone.utc).isoformat(),
    )
    if out_path is not None:
        with open(out_path, "w", newline="\n") as fh:
            fh.write(payload)
        with open(manifest_path(out_path), "w", newline="\n") as fh:
            fh.write(manifest.to_json())
    return manifest


def manifest_path(csv_path) -> str:
    return str(csv_path) + ".manifest.json"


def _version() -> str:
    from . import __version__

    return __version__


def load_samples(path):
    """Read a samples CSV back into a dict of numpy arrays (+ 'family', 'region')."""
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        rows = [line.rstrip("\n").split(",") for line in fh if line.strip()]
    out = {}
    for k, name in enumerate(header):
        col = [r[k] for r in rows]
        if name in ("family", "region"):
            out[name] = np.array(col)
        else:
            out[name] = np.array([float(v) for v in col])
    return out


def recompute_metrics(family: str, data: dict):
    """Recompute (c, s, gap_a, gap_b, chsh) from the parameter columns of a CSV."""
    if family == "e0":
        mats = batches.build_e0_mats(data["param_a"], data["param_b"], data["param_c"], data["param_theta"])
        a, b = data["param_a"], data["param_b"]
        conc = batches.concurrence_x_batch(
            np.stack([np.zeros_like(a), a, b, 1.0 - a - b], axis=1), np.zeros_like(a), mats[:, 1, 2]
        )
    elif family == "e1":
        mats = batches.build_e1_mats(
            data["param_a"], data["param_b"], data["param_f"], data["param_c"],
            data["param_d"], data["param_theta"], data["param_phi"],
        )
        a, b, f = data["param_a"], data["param_b"], data["param_f"]
        conc = batches.concurrence_x_batch(
            np.stack([f, a, b, 1.0 - a - b - f], axis=1), mats[:, 0, 3], mats[:, 1, 2]
        )
    elif family in ("separable", "full_rank"):
        n = len(data["param_m00_re"])
        mats = np.zeros((n, 4, 4), dtype=complex)
        for i in range(4):
            for j in range(4):
                mats[:, i, j] = data[f"param_m{i}{j}_re"] + 1j * data[f"param_m{i}{j}_im"]
        conc = batches.concurrence_wootters_batch(mats)
    else:
        raise ValueError(f"unknown family {family!r}")
    s = batches.linear_entropy_batch(mats)
    gap_a, gap_b = batches.gaps_batch(mats)
    return conc, s, gap_a, gap_b, batches.chsh_batch(mats)


# --- boundary-curve table ------------------------------------------------------

CURVE_COLUMNS = ("c", "frontier", "s_l_minus", "s_l_plus", "nv_lower")


def curves_table(step: float):
    """Rows of boundary-curve samples on the grid c = step, 2*step, ..., <= 1.

    Undefined values are ``None`` (printed as empty CSV fields): the two
    critical curves beyond c = 1/sqrt(2), and the lower bound of the
    no-violation region outside (0, 2/3).
    """
    if not step > 0:
        raise ValueError("step must be positive")
    rows = []
    i = 1
    while True:
        c = i * step
        if c > 1.0 + 1e-12:
            break
        c = min(c, 1.0)
        slm = s_l_minus(c) if c <= 1.0 / np.sqrt(2.0) else None
        slp = s_l_plus(c) if c <= 1.0 / np.sqrt(2.0) else None
        if c >= 2.0 / 3.0:
            nv_lower = None
        elif c < 0.5:
            nv_lower = 2.0 / 3.0
        else:
            nv_lower = float(s_l1(c))
        rows.append((c, frontier_mems(c), slm, slp, nv_lower))
        i += 1
    return rows


def write_curves_csv(step: float, out_path) -> int:
    """Write the boundary-curve table; returns the number of rows."""
    rows = curves_table(step)
    with open(out_path, "w", newline="\n") as fh:
        fh.write(",".join(CURVE_COLUMNS) + "\n")
        for row in rows:
            fh.write(",".join("" if v is None else f"{v:.17g}" for v in row) + "\n")
    return len(rows)
