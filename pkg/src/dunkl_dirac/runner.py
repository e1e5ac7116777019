"""Run a verification and persist its report."""

import json
from pathlib import Path
from typing import Any

from loguru import logger

from dunkl_dirac.checks import build_verification_pipeline
from dunkl_dirac.constants import REPORT_FILE, TIMINGS_FILE
from dunkl_dirac.run_config import RunConfig
from dunkl_dirac.verification import VerificationReport


def run_suite(config: RunConfig) -> VerificationReport:
    """Build the pipeline for ``config``, run every suite and return the report.

    Identity failures and check exceptions end up as rows; only configuration
    errors raise, and they do so before any suite runs.
    """
    pipeline = build_verification_pipeline(config)
    logger.info(
        "Verifying n={} with {} parameter set(s), realization={}, suites={}",
        config.dimensions,
        config.parameter_sets,
        config.realization,
        ",".join(config.suites),
    )
    return pipeline.execute(config=config.echo())


def dump_json(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_report(report: VerificationReport, out_dir: str | Path) -> tuple[Path, Path]:
    """Write ``report.json`` (byte-stable across runs) and ``timings.json``.

    Returns:
        The paths of both files.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report_path = out / REPORT_FILE
    timings_path = out / TIMINGS_FILE
    report_path.write_text(dump_json(report.deterministic_dump()), encoding="utf-8")
    timings_path.write_text(dump_json(report.timings_dump()), encoding="utf-8")
    logger.info("Wrote {} and {}", report_path, timings_path)
    return report_path, timings_path
