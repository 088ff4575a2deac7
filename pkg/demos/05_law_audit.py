"""Which algebraic laws actually hold?  Measure, don't assume.

The audit draws seeded operands, evaluates both sides of each claimed
identity, and tallies agreement.  Invariants of the angle-addition
semantics (commutativity, angle-level associativity, the conjugate
identity, de Moivre, root correctness) pass at rate 1.0.  Distributivity
over coordinate sums and the expanded coefficient formulas are hypotheses:
they hold on the plane and on the positive-argument domain respectively,
and fail elsewhere with reproducible counterexamples.
"""

import math

from hyperspace import CartesianHC, PolarHC, add, mul
from hyperspace.audit import AuditConfig, Domain, audit_law, report_to_markdown, run_audit

# A compact audit across dimensions 2 and 3.
cfg = AuditConfig(dims=(2, 3), samples=400, seed=42)
report = run_audit(cfg)
print(report_to_markdown(report))

# The distributivity failure is not a numerical artifact.  Multiplication
# rotates the whole sum by one angle chain, but the summands sit on
# different axes, so rotating them separately lands elsewhere:
s = PolarHC(1.0, (0.0, math.pi / 2))
t1 = CartesianHC((1.0, 0.0, 0.0))
t2 = CartesianHC((0.0, 1.0, 0.0))
print("s * (t1 + t2)   =", mul(s, add(t1, t2)), " modulus sqrt(2)")
print("s*t1 + s*t2     =", add(mul(s, t1), mul(s, t2)), " modulus 2")

# The same audit on the positive-restricted domain: the coefficient
# formulas agree with the normative product on the plane there.
restricted = AuditConfig(
    dims=(2,), samples=400, seed=42, domain=Domain.POSITIVE_RESTRICTED
)
result = audit_law("cartesian_mul_agreement", restricted, 2)
print(
    f"\ncartesian_mul_agreement, dim 2, positive domain: "
    f"{result.passes}/{result.samples} (max dev {result.max_dev:.2e})"
)

# Determinism: the same configuration always reproduces the same first
# counterexample, so every failure in a report can be replayed.
first = audit_law("distributive", AuditConfig(dims=(3,), samples=200), 3)
again = audit_law("distributive", AuditConfig(dims=(3,), samples=200), 3)
print("counterexample stable across runs:", first.counterexample == again.counterexample)
print("first failing sample index:", first.counterexample["sample_index"])
