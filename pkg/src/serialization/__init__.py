"""
File schemas, codecs and object mappings.
"""

from .codec import (
    dump_json,
    load_json,
    parse_json,
    parse_behavior_csv,
    parse_table_csv,
    read_table_csv,
    sha256_file,
    sha256_text,
    write_json,
)
from .mapping import (
    coordrep_to_schema,
    joint_from_schema,
    joint_state_from_schema,
    joint_to_schema,
    measurements_from_schema,
    reduction_to_report,
    system_from_schema,
    system_to_schema,
)
from .schemas import (
    AnalysisReport,
    ChshReport,
    CoordRepSchema,
    JointSchema,
    MeasurementsSchema,
    ReductionReport,
    RunManifest,
    SystemSchema,
)

__all__ = [
    "dump_json",
    "load_json",
    "parse_json",
    "parse_behavior_csv",
    "parse_table_csv",
    "read_table_csv",
    "sha256_file",
    "sha256_text",
    "write_json",
    "coordrep_to_schema",
    "joint_from_schema",
    "joint_state_from_schema",
    "joint_to_schema",
    "measurements_from_schema",
    "reduction_to_report",
    "system_from_schema",
    "system_to_schema",
    "AnalysisReport",
    "ChshReport",
    "CoordRepSchema",
    "JointSchema",
    "MeasurementsSchema",
    "ReductionReport",
    "RunManifest",
    "SystemSchema",
]
