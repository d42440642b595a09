from commands import construct, derive, jacobi, report, roots, scan
from schemas.run_config import Command

COMMANDS = {
    Command.CONSTRUCT: construct.run,
    Command.JACOBI: jacobi.run,
    Command.ROOTS: roots.run,
    Command.DERIVE: derive.run,
    Command.SCAN: scan.run,
    Command.REPORT: report.run,
}
