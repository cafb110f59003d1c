# # Scanning a batch
#
# A few thousand random arrays in, a tally of verdicts and killers out.

import random
from collections import Counter

from drgcheck.io import format_array, read_batch, render_report, scan_batch
from drgcheck.model import IntersectionArray


def random_array(rng):
    d = rng.randint(1, 4)
    b0 = rng.randint(2, 40)
    b = [b0]
    for _ in range(d - 1):
        b.append(rng.randint(1, b[-1]))
    c = [1]
    for _ in range(d - 1):
        c.append(rng.randint(c[-1], b0))
    return IntersectionArray(tuple(b), tuple(c))


rng = random.Random(2024)
lines = [format_array(random_array(rng)) for _ in range(2000)]
lines.insert(0, "{55,36,11;1,4,45}")
lines.append("{3,2;1}")  # malformed on purpose

verdicts = scan_batch(read_batch("\n".join(lines)))
tally = Counter(getattr(v, "status", "parse-error") for v in verdicts)
killers = Counter(v.killer_step.condition.value for v in verdicts
                  if getattr(v, "status", None) == "infeasible")
print(tally)
print(killers.most_common())

# Arrays that survive everything are worth a closer look.
survivors = [str(v.array) for v in verdicts if getattr(v, "status", None) == "inconclusive"]
print(len(survivors), "inconclusive, e.g.", survivors[:5])

# CSV output, first few rows.
print(render_report(verdicts[:4], "csv").decode())
