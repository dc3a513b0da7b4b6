"""
Runner that executes one validated CLI command.
"""

import json
import sys
from typing import Optional, TextIO

from src.config import AppConfig, RunConfig, SuiteBounds
from src.creation.operators import explore_B3
from src.macdonald.oracle import macdonald_poly, to_macdonald_basis
from src.methods.backend import JPolyMethod, create_method
from src.pieri.kostka import kostka_matrix
from src.pieri.pieri import pieri_expand
from src.symfun.bases import Basis, SymExpansion, m_coefficients
from src.symfun.partitions import c_lambda
from src.utils.commands import Command, OutputFormat
from src.utils.logger import Logger
from src.utils.parallel import configure_threads
from src.verify.suites import run_suite

EXIT_OK = 0
EXIT_FAILURE = 1


class CommandRunner:
    """
    Dispatches a RunConfig to the matching command and writes its result.

    Responsibilities:
    - Configure the worker pool
    - Run the command
    - Serialize the result to stdout in the requested format
    - Map outcomes to exit codes (0 success, 1 failed identity or breach)
    """

    def __init__(self, config: AppConfig, logger: Logger, out: Optional[TextIO] = None):
        """
        Initialize the runner.

        Args:
            config: Application configuration
            logger: Logger instance
            out: Result stream (defaults to stdout)
        """
        self.config = config
        self.logger = logger
        self._out = out

    def _emit(self, text: str) -> None:
        print(text, file=self._out or sys.stdout)

    def run(self, cfg: RunConfig) -> int:
        """
        Execute one command.

        Returns:
            Process exit code

        Raises:
            ValueError: On usage errors detected while running
            RuntimeError: On internal invariant breaches
        """
        configure_threads(cfg.threads)
        name = cfg.command.name.lower()
        self.logger.info("runner", f"{name} started")
        with self.logger.timed("runner", name):
            if cfg.command == Command.JPOLY:
                code = self.cmd_jpoly(cfg)
            elif cfg.command == Command.VERIFY:
                code = self.cmd_verify(cfg)
            elif cfg.command == Command.KOSTKA:
                code = self.cmd_kostka(cfg)
            else:
                code = self.cmd_pieri(cfg)
        self.logger.info("runner", f"{name} finished with exit code {code}")
        return code

    def cmd_jpoly(self, cfg: RunConfig) -> int:
        """J_lam (or P_lam with --monic) in the m-basis via the chosen method."""
        method: JPolyMethod = create_method(cfg.method, self.logger)
        poly = method.build(cfg.partition, cfg.nvars)
        lead = c_lambda(cfg.partition)
        if cfg.monic:
            poly = poly / lead
        expansion = SymExpansion(Basis.M, cfg.nvars, m_coefficients(poly))

        expected = 1 if cfg.monic else lead
        if expansion.coefficient(cfg.partition) != expected:
            raise RuntimeError(
                f"{method.label} produced coefficient {expansion.coefficient(cfg.partition)} "
                f"for m_{cfg.partition}, expected {expected}"
            )
        if cfg.format == OutputFormat.JSON:
            self._emit(expansion.to_json())
        else:
            self._emit(expansion.to_text())
        return EXIT_OK

    def cmd_verify(self, cfg: RunConfig) -> int:
        """Run one exact-identity suite; exit 0 iff every identity holds."""
        bounds = SuiteBounds(nvars=cfg.nvars, max_degree=cfg.max_degree, seed=cfg.seed)
        report = run_suite(cfg.suite, bounds, self.logger)
        if cfg.format == OutputFormat.JSON:
            self._emit(report.to_json())
        else:
            self._emit(report.to_text())
        for failure in report.failures():
            self.logger.error("verify", f"{failure.name}: {failure.counterexample}")
        return EXIT_OK if report.passed else EXIT_FAILURE

    def cmd_kostka(self, cfg: RunConfig) -> int:
        """(q,t)-Kostka table of degree n; exit 0 iff every entry is in Z[q,t]."""
        matrix = kostka_matrix(cfg.degree, logger=self.logger)
        for lam, mu in matrix.non_positive():
            self.logger.info("kostka", f"entry ({lam}),({mu}) has a negative coefficient")
        if cfg.format == OutputFormat.JSON:
            self._emit(matrix.to_json())
        else:
            self._emit(matrix.to_text())
        if not matrix.is_integral():
            self.logger.error("kostka", f"non-integral entries: {matrix.non_integral()}")
            return EXIT_FAILURE
        return EXIT_OK

    def cmd_pieri(self, cfg: RunConfig) -> int:
        """e_k P_lam in the P basis; --explore adds B3_k J_lam in the J basis."""
        expansion = pieri_expand(cfg.partition, cfg.k, cfg.nvars)
        explored: Optional[SymExpansion] = None
        if cfg.explore:
            image = explore_B3(macdonald_poly(cfg.partition, cfg.nvars), cfg.k)
            explored = to_macdonald_basis(image, Basis.MACDONALD_J)
            if cfg.partition.length > cfg.k:
                self.logger.warning("pieri", f"l({cfg.partition}) > k={cfg.k}: B3 output is exploratory")

        if cfg.format == OutputFormat.JSON:
            data = {"pieri": expansion.to_json_dict(), "nvars": cfg.nvars}
            if explored is not None:
                data["explore"] = {
                    "operator": f"B3_{cfg.k}",
                    "exploratory": cfg.partition.length > cfg.k,
                    "image": explored.to_json_dict(),
                }
            self._emit(json.dumps(data, indent=2))
        else:
            self._emit(expansion.to_text())
            if explored is not None:
                tag = " (exploratory)" if cfg.partition.length > cfg.k else ""
                self._emit(f"B3_{cfg.k} J[{cfg.partition}]{tag} =")
                self._emit(explored.to_text())
        return EXIT_OK
