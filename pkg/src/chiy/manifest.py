"""JSON manifests describing the known invariants of a manifold.

Example::

    {"name": "P2", "dimension": 2,
     "chern": {"1,1": 9, "2": 3},
     "hodge": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
     "structure": "kaehler"}

Chern keys are comma-joined partition parts (``"1,1"`` is ``c_1^2``).
``hodge`` rows are indexed by ``q``, columns by ``p``.  Fixed points are
``{"weights": [[...], ...]}`` (rationals as numbers or ``"p/q"`` strings)
or ``{"indices": [...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .genus import ChernNumbers
from .hodge import BettiVector, HodgeDiamond, Tier, betti_from_diamond
from .kernel import partition, weight
from .localization import FixedPointData

STRUCTURES = {
    "almost-complex": Tier.RAW,
    "kaehler": Tier.KAEHLER,
    "calabi-yau": Tier.KAEHLER,
    "mirror": Tier.MIRROR,
    "hyperkaehler": Tier.MIRROR,
}


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class ManifoldManifest:
    name: str
    dimension: int
    chern: ChernNumbers | None = None
    hodge: HodgeDiamond | None = None
    betti: BettiVector | None = None
    fixed_points: FixedPointData | None = None
    structure: str = "almost-complex"

    @property
    def tier(self) -> Tier:
        return STRUCTURES[self.structure]

    def to_json(self) -> dict:
        out = {"name": self.name, "dimension": self.dimension, "structure": self.structure}
        if self.chern is not None:
            out["chern"] = {",".join(map(str, lam)): _num(v)
                            for lam, v in sorted(self.chern.values.items(), reverse=True)}
        if self.hodge is not None:
            out["hodge"] = self.hodge.rows()
        if self.betti is not None:
            out["betti"] = list(self.betti)
        if self.fixed_points is not None:
            pts = self.fixed_points.points
            if all(P.weights is not None for P in pts):
                out["fixed_points"] = {"weights": [[_num(w) for w in P.weights] for P in pts]}
            else:
                out["fixed_points"] = {"indices": [P.index for P in pts]}
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _num(v):
    v = Fraction(v)
    return int(v) if v.denominator == 1 else str(v)


def _rational(v, what: str) -> Fraction:
    if isinstance(v, bool):
        raise ManifestError(f"{what}: expected a rational, got {v!r}")
    try:
        if isinstance(v, float):
            return Fraction(repr(v))
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ManifestError(f"{what}: expected a rational, got {v!r}") from None


def _parse_partition_key(key: str, n: int):
    try:
        parts = [int(tok) for tok in key.split(",")]
    except ValueError:
        raise ManifestError(f"malformed partition key {key!r}") from None
    if not parts or any(p <= 0 for p in parts):
        raise ManifestError(f"malformed partition key {key!r}")
    lam = partition(*parts)
    if weight(lam) != n:
        raise ManifestError(f"partition {key!r} has weight {weight(lam)}, expected {n}")
    return lam


def parse_manifest(document: str | bytes | dict) -> ManifoldManifest:
    if isinstance(document, (str, bytes)):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ManifestError(f"invalid JSON: {exc}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise ManifestError("manifest must be a JSON object")
    if "dimension" not in doc:
        raise ManifestError("missing dimension")
    n = doc["dimension"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ManifestError(f"dimension must be a nonnegative integer, got {n!r}")
    name = str(doc.get("name", ""))
    structure = doc.get("structure", "almost-complex")
    if structure not in STRUCTURES:
        raise ManifestError(f"unknown structure {structure!r}; expected one of "
                            f"{', '.join(STRUCTURES)}")
    if structure in ("mirror", "hyperkaehler") and n % 2:
        raise ManifestError(f"{structure} structure needs even dimension")

    chern = None
    if doc.get("chern") is not None:
        raw = doc["chern"]
        if not isinstance(raw, dict):
            raise ManifestError("chern must be an object of partition keys")
        values = {}
        for key, v in raw.items():
            lam = _parse_partition_key(str(key), n)
            if lam in values:
                raise ManifestError(f"duplicate partition key {key!r}")
            q = _rational(v, f"chern[{key}]")
            values[lam] = q
        chern = ChernNumbers(n, values)

    hodge = None
    if doc.get("hodge") is not None:
        rows = doc["hodge"]
        if (not isinstance(rows, list) or len(rows) != n + 1
                or any(not isinstance(r, list) or len(r) != n + 1 for r in rows)):
            raise ManifestError("diamond shape must be (n+1)x(n+1)")
        try:
            hodge = HodgeDiamond.from_rows(rows, n)
        except ValueError as exc:
            raise ManifestError(str(exc)) from None
        if any(v < 0 for _, _, v in hodge.entries()):
            raise ManifestError("Hodge numbers must be nonnegative")

    betti = None
    if doc.get("betti") is not None:
        try:
            betti = BettiVector(tuple(doc["betti"]))
        except (TypeError, ValueError) as exc:
            raise ManifestError(str(exc)) from None
        if len(betti) != 2 * n + 1:
            raise ManifestError(f"betti must have length {2 * n + 1}, got {len(betti)}")
    if hodge is not None:
        derived = betti_from_diamond(hodge)
        if betti is not None and betti != derived:
            raise ManifestError(
                f"betti {list(betti)} disagrees with hodge diamond {list(derived)}")
        betti = derived

    fixed = None
    if doc.get("fixed_points") is not None:
        fp = doc["fixed_points"]
        try:
            if isinstance(fp, dict) and "weights" in fp:
                ws = [[_rational(w, "weight") for w in pt] for pt in fp["weights"]]
                fixed = FixedPointData.from_weights(n, ws)
            elif isinstance(fp, dict) and "indices" in fp:
                idx = fp["indices"]
                if any(isinstance(d, bool) or not isinstance(d, int) for d in idx):
                    raise ManifestError("indices must be integers")
                fixed = FixedPointData.from_indices(n, idx)
            else:
                raise ManifestError('fixed_points needs "weights" or "indices"')
        except ManifestError:
            raise
        except (TypeError, ValueError) as exc:
            raise ManifestError(f"fixed_points: {exc}") from None

    if chern is None and hodge is None and betti is None and fixed is None:
        raise ManifestError("manifest carries no data (chern, hodge, betti or fixed_points)")
    return ManifoldManifest(name, n, chern, hodge, betti, fixed, structure)


def load_manifest(path) -> ManifoldManifest:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ManifestError(f"cannot read {path}: {exc.strerror}") from None
    return parse_manifest(text)
