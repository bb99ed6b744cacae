import os
import json
import logging
from typing import Dict, Any, List, Optional

from ..core.manifest import RunManifest

logger = logging.getLogger(__name__)

ARTIFACT_VERSION = "1.0.0"

# Flags that only affect where things are written or how loudly
_NON_SEMANTIC = {"manifest", "log_level", "progress", "command"}


def build_manifest(args, outputs: Optional[List[str]] = None) -> RunManifest:
    """Manifest of a parsed command line: every semantic flag plus the output files."""
    parameters: Dict[str, Any] = {
        key: value for key, value in sorted(vars(args).items()) if key not in _NON_SEMANTIC
    }
    return RunManifest(
        command=args.command,
        parameters=parameters,
        seed=args.seed,
        artifact_version=ARTIFACT_VERSION,
        outputs=list(outputs or []),
    )


def write_manifest(manifest: RunManifest, path: str) -> str:
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, "w") as f:
        json.dump(manifest.to_dict(), f, indent=2, sort_keys=True)
    logger.info(f"Manifest written to {path}")
    return path


def write_manifests(manifest: RunManifest, explicit_path: Optional[str]) -> List[str]:
    """Write the manifest next to every output file and to --manifest if given."""
    written = [write_manifest(manifest, f"{output}.manifest.json") for output in manifest.outputs]
    if explicit_path:
        written.append(write_manifest(manifest, explicit_path))
    return written
