"""
Conversions between library objects and file schemas.
"""

from typing import List, Sequence

from compose import JointState, JointSystem, TensorRule, explicit_tensor, gen_max_tensor, max_tensor, min_tensor
from compose import quantum_tensor
from models import qubit
from tablecore import CoordRep, LinearDependencies, ProbTable, RedundantEntry
from theory import Measurement, build_system
from utils.errors import SchemaError
from utils.scalars import format_scalar, parse_scalar

from .schemas import (
    ConeSchema,
    CoordRepSchema,
    JointSchema,
    MeasurementsSchema,
    RedundancySchema,
    ReductionReport,
    SystemSchema,
)


def format_value(value) -> str:
    return repr(float(value)) if isinstance(value, float) else format_scalar(value)


def format_row(row: Sequence) -> List[str]:
    return [format_value(x) for x in row]


def parse_row(row: Sequence[str], numeric: bool = False) -> tuple:
    try:
        return tuple(float(x) for x in row) if numeric else tuple(parse_scalar(x) for x in row)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad scalar in {list(row)}: {exc}") from exc


def system_to_schema(system) -> SystemSchema:
    if system.numeric:
        return SystemSchema(name=system.name, dim=system.dim, numeric=True, unit=format_row(system.unit))
    return SystemSchema(
        name=system.name,
        dim=system.dim,
        states=[format_row(w) for w in system.states],
        effects=[format_row(e) for e in system.effects],
        unit=format_row(system.unit),
        gram=[format_row(r) for r in system.gram] if system.gram is not None else None,
    )


def system_from_schema(schema: SystemSchema):
    """Exact GptSystem, or the numeric qubit when the schema is numeric.

    The effects are closed under complement and the zero and unit effects
    are added, so a file may list only a generating set. States are kept
    as written so that validation reports on exactly what the file contains.
    """
    if schema.numeric:
        return qubit()
    return build_system(
        schema.name,
        [parse_row(w) for w in schema.states],
        [parse_row(e) for e in schema.effects],
        parse_row(schema.unit),
        gram=[parse_row(r) for r in schema.gram] if schema.gram is not None else None,
        reduce_states=False,
    )


def joint_to_schema(system: JointSystem, state: JointState = None, nesting_verified: bool = None) -> JointSchema:
    cone = None
    if system.state_cone is not None:
        cone = ConeSchema(
            generators=[format_row(g) for g in system.state_cone.generators]
            if system.state_cone.generators is not None else None,
            halfspaces=[format_row(h) for h in system.state_cone.halfspaces]
            if system.state_cone.halfspaces is not None else None,
        )
    return JointSchema(
        left=system.left.name,
        right=system.right.name,
        rule=system.rule.value,
        coords=[format_row(r) for r in state.coords] if state is not None else None,
        left_system=system_to_schema(system.left),
        right_system=system_to_schema(system.right),
        cone=cone,
        nesting_verified=nesting_verified,
    )


def joint_from_schema(schema: JointSchema) -> JointSystem:
    """Rebuild the composite; explicit cones are re-validated."""
    left = system_from_schema(schema.left_system)
    right = system_from_schema(schema.right_system)
    rule = TensorRule(schema.rule)
    if rule == TensorRule.QUANTUM:
        return quantum_tensor(left, right)
    if rule == TensorRule.MIN:
        return min_tensor(left, right)
    if rule == TensorRule.MAX:
        return max_tensor(left, right)
    if rule == TensorRule.GEN_MAX:
        return gen_max_tensor(left, right)
    if schema.cone is None or schema.cone.generators is None:
        raise ValueError("explicit joint systems need cone generators")
    return explicit_tensor(left, right, [parse_row(g) for g in schema.cone.generators])


def joint_state_from_schema(schema: JointSchema) -> JointState:
    if schema.coords is None:
        raise ValueError("joint file carries no state coordinates")
    numeric = schema.left_system.numeric or schema.right_system.numeric
    return JointState(tuple(parse_row(r, numeric) for r in schema.coords))


def measurements_from_schema(schema: MeasurementsSchema, numeric_left: bool = False,
                             numeric_right: bool = False):
    left = tuple(Measurement(tuple(parse_row(e, numeric_left) for e in m)) for m in schema.left)
    right = tuple(Measurement(tuple(parse_row(e, numeric_right) for e in m)) for m in schema.right)
    return left, right


def coordrep_to_schema(rep: CoordRep) -> CoordRepSchema:
    return CoordRepSchema(
        dim=rep.dim,
        effects=[format_row(e) for e in rep.effect_coords],
        states=[format_row(w) for w in rep.state_coords],
        conjugate_basis=[format_row(r) for r in rep.conjugate_basis],
        effect_labels=list(rep.effect_labels),
        state_labels=list(rep.state_labels),
    )


def reduction_to_report(table: ProbTable, redundant: Sequence[RedundantEntry],
                        trimmed: ProbTable, dependencies: LinearDependencies) -> ReductionReport:
    """Report on a reduced table; dependencies refer to the table with redundant entries dropped."""
    def labels(axis, source=table):
        return source.effect_labels if axis == "effect" else source.state_labels

    def relations(found, axis):
        names = labels(axis, trimmed)
        return {names[i]: {names[k]: format_scalar(c) for k, c in coeffs.items()} for i, coeffs in found.items()}

    return ReductionReport(
        effects=table.shape[0],
        states=table.shape[1],
        rank=trimmed.rank,
        effect_classes=[list(c) for c in table.effect_classes],
        state_classes=[list(c) for c in table.state_classes],
        redundant=[RedundancySchema(axis=r.axis, label=r.label,
                                    coefficients={labels(r.axis)[k]: format_scalar(w)
                                                  for k, w in r.coefficients.items()})
                   for r in redundant],
        effect_relations=relations(dependencies.effect_relations, "effect"),
        state_relations=relations(dependencies.state_relations, "state"),
    )
