"""Plain-text views of report data."""
import json

from django.conf import settings


def render_json(data):
    """Deterministic JSON: sorted keys, fixed indent, schema stamped in."""
    payload = {"schema": settings.GRADEDFLIP["JSON_SCHEMA_VERSION"], **data}
    return json.dumps(payload, sort_keys=True, indent=2)


def render_checks(checks):
    width = max((len(check.name) for check in checks), default=0)
    lines = []
    for check in checks:
        line = f"{check.name.ljust(width)}  {check.status.upper():<14}"
        if check.detail:
            line += f"  {check.detail}"
        lines.append(line.rstrip())
    return lines


def render_table(table):
    """One row per degree h, one column per weight."""
    weights = list(table.weights)
    degrees = table.nonzero_degrees()
    label = f"RGamma{'+' if table.side == 'plus' else '-'}"
    lines = [f"{label} ({'extended' if table.extended else 'plain'}, {table.source}) weights {table.lo}..{table.hi}"]
    if not degrees:
        lines.append("  (zero)")
        return lines
    cells = [[str(table.dim(h, i)) for i in weights] for h in degrees]
    width = max(len(str(i)) for i in weights)
    width = max([width] + [len(cell) for row in cells for cell in row])
    lines.append("  h\\i " + " ".join(str(i).rjust(width) for i in weights))
    for h, row in zip(degrees, cells):
        lines.append(f"  {h:>3} " + " ".join(cell.rjust(width) for cell in row))
    if not table.is_complete:
        missing = [weight for weight, exact in sorted(table.complete.items()) if not exact]
        lines.append(f"  weights {missing[0]}..{missing[-1]} counted inside exponent box {table.box}")
    return lines


def render_complex(complex_):
    lines = [f"ranks (degree {complex_.hi} down to {complex_.lo}): {list(complex_.ranks)}"]
    for degree in reversed(list(complex_.degrees)):
        module = complex_.module(degree)
        lines.append(f"  degree {degree}: {module}")
    return lines


def render_report(report, timing=True):
    lines = [
        f"gradedflip {report.version}  {report.command}  {report.spec}",
        f"digest {report.digest}",
        "",
    ]
    lines.extend(render_checks(report.checks))
    for table in report.tables:
        lines.append("")
        lines.extend(render_table(table))
    if report.errors:
        lines.append("")
        lines.extend(f"error: {error}" for error in report.errors)
    lines.append("")
    verdict = {0: "all applicable checks pass", 1: "check failures", 3: "budget exceeded"}
    summary = f"exit {report.exit_code}: {verdict[report.exit_code]}"
    if timing and report.timing is not None:
        summary += f" ({report.timing}s)"
    lines.append(summary)
    return "\n".join(lines)
