"""Running builtin suites from Python rather than the command line."""
from bruckreilly.verify import builtin_suite, run_suites

names = ["ext-bicyclic-assoc", "prop-1.1-ii-leftzero", "example-3.9-joint-discontinuity"]
report = run_suites([builtin_suite(n) for n in names])
print(report.text())
print("exit code", report.exit_code())
