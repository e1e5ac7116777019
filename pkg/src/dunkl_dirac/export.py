"""Byte-stable exports of the monogenic bases, ladder actions and connection coefficients.

Every artifact is computed at the first parameter set of each dimension, up to
the monogenic depth of the run. Files are written with ``\\n`` line endings and
rationals as ``num/den`` so that a fixed configuration reproduces them byte for
byte.
"""

import csv
from collections.abc import Iterable, Sequence
from enum import StrEnum
from pathlib import Path

from loguru import logger

from dunkl_dirac.algebra.blade import Blade, all_blades
from dunkl_dirac.algebra.parameters import ParameterSet
from dunkl_dirac.constants import BASIS_DIR, CONNECTION_DIR, LADDER_FILE
from dunkl_dirac.ladder import LadderAction, ladder_actions
from dunkl_dirac.monogenics import basis_psi, connection_matrix, enumerate_labels
from dunkl_dirac.monogenics.labels import MultiIndex
from dunkl_dirac.run_config import RunConfig

LADDER_HEADER = ("ell", "sign", "j_from", "j_to", "coeff_num", "coeff_den")
CONNECTION_HEADER = ("j_row", "j_col", "numerator", "denominator")
GRAM_HEADER = ("j", "gram_num", "gram_den", "gram_prime_num", "gram_prime_den")


class Artifact(StrEnum):
    BASIS = "basis"
    LADDER = "ladder"
    CONNECTION = "connection"


def _stem(n: int, k: int, blade: Blade) -> str:
    return f"n{n}_k{k}_s{blade.label}"


def _write_rows(path: Path, header: Sequence[str], rows: Iterable[Sequence[object]]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def _index_text(index: MultiIndex | None) -> str:
    return "" if index is None else str(index)


def export_basis(params: ParameterSet, k: int, blade: Blade, out_dir: Path) -> Path:
    """One ``# j=... s=...`` header per label, followed by the canonical serialization of Psi."""
    blocks = []
    for label in enumerate_labels(params.n, k, [blade]):
        psi = basis_psi(label, params)
        blocks.append(f"# {label}\n{psi.serialize()}\n")
    path = out_dir / BASIS_DIR / f"{_stem(params.n, k, blade)}.txt"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(blocks), encoding="utf-8", newline="\n")
    return path


def ladder_rows(actions: Iterable[LadderAction]) -> list[tuple[object, ...]]:
    return [
        (
            action.step.ell,
            action.step.symbol,
            _index_text(action.source),
            _index_text(action.target),
            action.coefficient.numerator,
            action.coefficient.denominator,
        )
        for action in actions
    ]


def export_ladder(parameter_sets: Sequence[ParameterSet], depths: Sequence[int], out_dir: Path) -> Path:
    """The ladder action table over every dimension and degree, unit blade."""
    rows: list[tuple[object, ...]] = []
    for params, depth in zip(parameter_sets, depths, strict=True):
        for k in range(depth + 1):
            rows.extend(ladder_rows(ladder_actions(params, k, Blade.unit(params.n))))
    return _write_rows(out_dir / LADDER_FILE, LADDER_HEADER, rows)


def export_connection(params: ParameterSet, k: int, blade: Blade, out_dir: Path) -> tuple[Path, Path]:
    """Raw overlaps <Psi_j, Phi_j'> and the Gram diagonals of both bases."""
    data = connection_matrix(params, k, blade)
    stem = _stem(params.n, k, blade)
    overlaps = [
        (str(data.labels[a]), str(data.labels[b]), data.overlaps[a, b].numerator, data.overlaps[a, b].denominator)
        for a in range(data.size)
        for b in range(data.size)
    ]
    gram = [
        (
            str(data.labels[a]),
            data.gram[a, a].numerator,
            data.gram[a, a].denominator,
            data.gram_prime[a, a].numerator,
            data.gram_prime[a, a].denominator,
        )
        for a in range(data.size)
    ]
    directory = out_dir / CONNECTION_DIR
    return (
        _write_rows(directory / f"{stem}.csv", CONNECTION_HEADER, overlaps),
        _write_rows(directory / f"{stem}_gram.csv", GRAM_HEADER, gram),
    )


def export_artifacts(config: RunConfig, artifacts: Iterable[Artifact | str] = tuple(Artifact)) -> list[Path]:
    """Write the selected artifacts under ``config.out_dir`` and return their paths."""
    selected = {Artifact(a) for a in artifacts}
    out_dir = Path(config.out_dir)
    first_sets = [config.parameter_sets_for(n)[0] for n in config.dimensions]
    depths = [config.depth("monogenic", n) for n in config.dimensions]
    written: list[Path] = []

    for params, depth in zip(first_sets, depths, strict=True):
        for k in range(depth + 1):
            for blade in all_blades(params.n):
                if Artifact.BASIS in selected:
                    written.append(export_basis(params, k, blade, out_dir))
                if Artifact.CONNECTION in selected:
                    written.extend(export_connection(params, k, blade, out_dir))
    if Artifact.LADDER in selected:
        written.append(export_ladder(first_sets, depths, out_dir))

    logger.info("Exported {} file(s) to {}", len(written), out_dir)
    return written
