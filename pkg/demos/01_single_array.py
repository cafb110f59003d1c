# # Walking one array through the chain
#
# {55,36,11;1,4,45} passes every counting test and every multiplicity is
# an integer. Only the local-graph argument at the end rules it out.

from drgcheck.feasibility import Outcome, run_nonexistence_chain
from drgcheck.io import parse_array
from drgcheck.model import derive_parameters
from drgcheck.spectral import spectrum

arr = parse_array("{55,36,11;1,4,45}")
dp = derive_parameters(arr)
print("n =", dp.n, " k =", [str(k) for k in dp.k], " a =", list(dp.a))

# The spectrum is rational here, so every value prints exactly.
sp = spectrum(arr, dp)
print("eigenvalues   ", [str(t) for t in sp.eigenvalues])
print("multiplicities", [str(m) for m in sp.multiplicities])

# Each trace step names its condition, inputs and outcome.
verdict = run_nonexistence_chain(arr)
for step in verdict.trace:
    mark = "x" if step.outcome is Outcome.VIOLATED else " "
    print(f"[{mark}] {step.condition.value:26s} {step.detail}")

print()
print("status:", verdict.status, "| killer:", verdict.killer_step.condition.value)
print("c range tried:", verdict.killer_step.inputs["c_range"])
