"""
One-shot verification
=====================

Re-derives every numerical claim the package reproduces and prints the
record-by-record outcome.  The same report is available from the command
line as `hmap verify --suite all`.
"""

from pathlib import Path

from hmap import run_suite

report = run_suite("all")
for line in report.summary_lines():
    print(line)

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
path = out / "verification_report.json"
path.write_text(report.to_json())
print("\nfull report:", path)
