"""
Command implementations for the gptkit CLI.

Each command returns a process exit code: 0 on success, 2 when the input
parses but fails validation.
"""

import logging
from typing import Dict

import config
from bell import behavior_from, chsh, correlators, max_chsh, no_signaling_check
from compose import TensorRule, gen_max_tensor, max_tensor, min_tensor, quantum_tensor, verify_nesting
from models import classical, gbit, holevo_restricted, polygon, qubit
from serialization import (
    AnalysisReport,
    ChshReport,
    JointSchema,
    MeasurementsSchema,
    SystemSchema,
    coordrep_to_schema,
    dump_json,
    joint_from_schema,
    joint_state_from_schema,
    joint_to_schema,
    load_json,
    measurements_from_schema,
    read_table_csv,
    reduction_to_report,
    system_from_schema,
    system_to_schema,
    write_json,
)
from serialization.mapping import format_row, format_value
from tablecore import coordinate_rep, drop_redundant, find_convex_redundant, linear_dependencies, reduce_table
from theory import (
    check_no_restriction,
    compute_emax,
    effect_norm,
    hasse_edges,
    joint_measurability_matrix,
    state_norm,
    validate_system,
)
from utils import log_report, log_workflow_step

from .display import (
    display_boolean_status,
    display_failure_message,
    display_matrix,
    display_results_header,
    display_status_line,
    display_success_message,
)
from .manifest import write_manifest

logger = logging.getLogger(__name__)


def _emit(model, path, outputs: Dict[str, str]) -> None:
    """Write a schema to path, or print it when no path is given."""
    if path:
        outputs[str(path)] = write_json(model, path)
    else:
        print(dump_json(model), end="")


def cmd_reduce(args) -> int:
    """CSV table -> reduced table, redundancy report and coordinate representation."""
    log_workflow_step(logger, 1, "Loading table", "📥")
    raw = read_table_csv(args.table)

    log_workflow_step(logger, 2, "Merging duplicate rows and columns")
    reduced = reduce_table(raw)

    log_workflow_step(logger, 3, "Detecting convex redundancy")
    redundant = find_convex_redundant(reduced)
    trimmed = drop_redundant(reduced, redundant)

    log_workflow_step(logger, 4, "Building coordinate representation")
    dependencies = linear_dependencies(trimmed)
    rep = coordinate_rep(trimmed)

    outputs: Dict[str, str] = {}
    _emit(coordrep_to_schema(rep), args.output, outputs)
    if args.report:
        outputs[str(args.report)] = write_json(reduction_to_report(reduced, redundant, trimmed, dependencies),
                                               args.report)

    display_results_header("Table reduction")
    display_status_line("Shape", f"{reduced.shape[0]} effects x {reduced.shape[1]} states")
    display_status_line("Rank", str(rep.dim))
    display_boolean_status("Convex redundancy", not redundant, len(redundant),
                           ", ".join(r.label for r in redundant) or None)
    display_matrix("Effect coordinates", [format_row(e) for e in rep.effect_coords], list(rep.effect_labels))
    display_matrix("State coordinates", [format_row(w) for w in rep.state_coords], list(rep.state_labels))

    write_manifest("reduce", vars_of(args), [args.table], outputs, args.manifest)
    display_success_message("Table reduced")
    return 0


def cmd_analyze(args) -> int:
    """Validate a system; for valid systems report norms, E^max, no-restriction,
    joint measurability of the listed effects and the Hasse edges of their order."""
    schema = load_json(SystemSchema, args.system)
    system = system_from_schema(schema)

    log_workflow_step(logger, 1, f"Validating {system.name}")
    validation = validate_system(system)
    report = AnalysisReport(
        system=system.name,
        dim=system.dim,
        valid=validation.valid,
        violations=[v.message for v in validation.violations],
    )
    effects = system.standard_effects() if system.numeric else list(system.effects)
    if validation.valid:
        report.state_norms = [format_value(state_norm(system, w)) for w in system.states]
        report.effect_norms = [format_value(effect_norm(system, e)) for e in effects]
        report.hasse_edges = [list(edge) for edge in hasse_edges(system, effects)]
    if validation.valid and not system.numeric:
        log_workflow_step(logger, 2, "Checking the no-restriction hypothesis")
        result = check_no_restriction(system)
        report.unrestricted = result.unrestricted
        report.restriction_witness = format_row(result.witness) if result.witness is not None else None
        if args.emax or system.dim * len(system.states) <= config.EMAX_ENUMERATION_LIMIT:
            report.emax_vertices = [format_row(v) for v in compute_emax(system).vertices]
        log_workflow_step(logger, 3, "Testing pairwise joint measurability")
        report.joint_measurability = joint_measurability_matrix(system, effects)

    outputs: Dict[str, str] = {}
    _emit(report, args.output, outputs)

    display_results_header(f"Analysis of {system.name}")
    display_boolean_status("Valid", validation.valid, len(validation.violations))
    if report.unrestricted is not None:
        display_boolean_status("No-restriction", report.unrestricted,
                               details=", ".join(report.restriction_witness or []) or None)
    if report.emax_vertices is not None:
        display_matrix("E^max vertices", report.emax_vertices)

    write_manifest("analyze", vars_of(args), [args.system], outputs, args.manifest)
    if not validation.valid:
        log_report(logger, "Violations", report.violations)
        display_failure_message(f"{system.name} failed validation")
        return 2
    display_success_message("Analysis complete")
    return 0


def cmd_compose(args) -> int:
    """Compose two systems under a tensor rule and stamp the nesting check."""
    left = system_from_schema(load_json(SystemSchema, args.left))
    right = system_from_schema(load_json(SystemSchema, args.right))
    rule = TensorRule(args.rule)

    log_workflow_step(logger, 1, f"Composing {left.name} and {right.name} ({rule.value})")
    if rule == TensorRule.QUANTUM:
        joint = quantum_tensor(left, right)
    elif rule == TensorRule.MIN:
        joint = min_tensor(left, right)
    elif rule == TensorRule.MAX:
        joint = max_tensor(left, right, enumerate_vertices=args.enumerate)
    elif rule == TensorRule.GEN_MAX:
        joint = gen_max_tensor(left, right, enumerate_vertices=args.enumerate)
    else:
        raise ValueError("explicit joint cones are read from joint files, not composed")

    log_workflow_step(logger, 2, "Verifying that the minimal tensor product nests inside")
    nested = verify_nesting(joint)

    outputs: Dict[str, str] = {}
    _emit(joint_to_schema(joint, nesting_verified=nested), args.output, outputs)

    display_results_header("Composition")
    display_status_line("Joint system", joint.name)
    if joint.state_cone is not None:
        display_status_line("Generators", "not enumerated" if joint.state_cone.generators is None
                            else str(len(joint.state_cone.generators)))
        display_status_line("Halfspaces", "not enumerated" if joint.state_cone.halfspaces is None
                            else str(len(joint.state_cone.halfspaces)))
    display_boolean_status("Nesting", nested)

    write_manifest("compose", vars_of(args), [args.left, args.right], outputs, args.manifest)
    if not nested:
        display_failure_message("minimal tensor product is not contained in the joint cone")
        return 2
    display_success_message("Composition complete")
    return 0


def cmd_chsh(args) -> int:
    """CHSH value of a joint state, or its maximum over the joint state space."""
    joint_schema = load_json(JointSchema, args.joint)
    system = joint_from_schema(joint_schema)
    left, right = measurements_from_schema(load_json(MeasurementsSchema, args.measurements),
                                           system.left.numeric, system.right.numeric)

    if args.maximize:
        log_workflow_step(logger, 1, "Maximizing CHSH over the joint state space")
        optimum = max_chsh(system, left[0], left[1], right[0], right[1])
        state, behavior = optimum.state, optimum.behavior
    else:
        log_workflow_step(logger, 1, "Evaluating CHSH on the supplied joint state")
        state = joint_state_from_schema(joint_schema)
        behavior = behavior_from(system, state, left[0], left[1], right[0], right[1])

    value = chsh(behavior)
    signaling = no_signaling_check(behavior)
    report = ChshReport(
        S=format_value(value),
        correlators=[format_row(row) for row in correlators(behavior).c],
        behavior=format_row(behavior.flat()),
        no_signaling=signaling.passed,
        state=[format_row(row) for row in state.coords],
    )
    outputs: Dict[str, str] = {}
    _emit(report, args.output, outputs)

    display_results_header("CHSH")
    display_status_line("S", report.S)
    display_boolean_status("No-signaling", signaling.passed, len(signaling.violations))
    logger.info(f"✅ CHSH on {system.name}: S = {report.S}")

    write_manifest("chsh", vars_of(args), [args.joint, args.measurements], outputs, args.manifest)
    if not signaling.passed:
        display_failure_message("behavior signals")
        return 2
    display_success_message("CHSH evaluation complete")
    return 0


def cmd_export(args) -> int:
    """Write a built-in model as a system JSON file."""
    name = args.model
    if name == "classical":
        system = classical(args.k or 2)
    elif name == "gbit":
        system = gbit()
    elif name == "polygon":
        system = polygon(args.k or 5)
    elif name == "qubit":
        system = qubit()
    elif name == "holevo":
        system = holevo_restricted().quotient
    else:
        raise ValueError(f"unknown model {name!r}")

    outputs: Dict[str, str] = {}
    _emit(system_to_schema(system), args.output, outputs)
    write_manifest("export", vars_of(args), [], outputs, args.manifest)
    logger.info(f"✅ Exported {system.name}")
    return 0


def vars_of(args) -> Dict[str, object]:
    """Options worth recording in a manifest."""
    return {k: v for k, v in vars(args).items() if k not in ("func", "manifest")}


COMMANDS = {
    "reduce": cmd_reduce,
    "analyze": cmd_analyze,
    "compose": cmd_compose,
    "chsh": cmd_chsh,
    "export": cmd_export,
}
