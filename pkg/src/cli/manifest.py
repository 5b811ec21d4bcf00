"""
Run manifests recording what a command read, how it was configured and
what it wrote.
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Sequence

import config
from serialization import RunManifest, sha256_file, write_json

logger = logging.getLogger(__name__)


def build_manifest(command: str, options: Dict[str, object], inputs: Sequence[str],
                   outputs: Dict[str, str]) -> RunManifest:
    """Manifest with sha256 digests of every input file and every output written."""
    return RunManifest(
        toolkit_version=config.TOOLKIT_VERSION,
        command=command,
        options={k: str(v) for k, v in sorted(options.items()) if v is not None},
        inputs={str(p): sha256_file(p) for p in inputs},
        outputs=dict(sorted(outputs.items())),
    )


def manifest_path(explicit: Optional[str], outputs: Dict[str, str]) -> Optional[Path]:
    if explicit:
        return Path(explicit)
    if outputs:
        first = Path(sorted(outputs)[0])
        return first.with_name(first.name + ".manifest.json")
    return None


def write_manifest(command: str, options: Dict[str, object], inputs: Sequence[str],
                   outputs: Dict[str, str], explicit: Optional[str] = None) -> Optional[Path]:
    path = manifest_path(explicit, outputs)
    if path is None:
        return None
    write_json(build_manifest(command, options, inputs, outputs), path)
    logger.info(f"🧾 Run manifest written to {path}")
    return path
