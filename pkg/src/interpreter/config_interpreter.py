"""
Interpreter layer: converts parsed command-line arguments into a RunConfig.
"""

from argparse import Namespace

from src.config import AppConfig, RunConfig
from src.symfun.partitions import Partition
from src.utils.commands import Command, Method, OutputFormat
from src.utils.logger import Logger


class ArgumentInterpreter:
    """
    Validates CLI arguments and fills in defaults from the application config.
    """

    def __init__(self, config: AppConfig, logger: Logger):
        """
        Initialize the interpreter.

        Args:
            config: Application configuration with suite bounds and guards
            logger: Logger instance
        """
        self.config = config
        self.logger = logger

    def interpret(self, args: Namespace) -> RunConfig:
        """
        Build a RunConfig from parsed arguments.

        Args:
            args: Namespace produced by the argparse parser in main

        Returns:
            Validated RunConfig

        Raises:
            ValueError: On any usage error (bad partition, l(lam) > N,
                degree over the guard, negative bounds)
        """
        command = Command.parse(args.command)
        threads = getattr(args, "threads", None)
        if threads is None:
            threads = self.config.threads
        if threads < 1:
            raise ValueError(f"--threads must be at least 1, got {threads}")

        cfg = RunConfig(
            command=command,
            format=OutputFormat.parse(getattr(args, "format", "text")),
            seed=self._seed(args),
            threads=threads,
        )

        if command == Command.JPOLY:
            self._interpret_jpoly(args, cfg)
        elif command == Command.VERIFY:
            self._interpret_verify(args, cfg)
        elif command == Command.KOSTKA:
            self._interpret_kostka(args, cfg)
        elif command == Command.PIERI:
            self._interpret_pieri(args, cfg)

        self.logger.debug("interpreter", f"{cfg}")
        return cfg

    def _seed(self, args: Namespace) -> int:
        seed = getattr(args, "seed", None)
        return self.config.bounds.seed if seed is None else seed

    def _partition_and_nvars(self, args: Namespace, cfg: RunConfig, extra: int = 0) -> None:
        cfg.partition = Partition.parse(args.partition)
        nvars = args.nvars if args.nvars is not None else max(cfg.partition.length + extra, 1)
        if nvars < 1:
            raise ValueError(f"--nvars must be at least 1, got {nvars}")
        if cfg.partition.length > nvars:
            raise ValueError(f"partition {cfg.partition} has more than {nvars} parts")
        cfg.nvars = nvars

    def _interpret_jpoly(self, args: Namespace, cfg: RunConfig) -> None:
        self._partition_and_nvars(args, cfg)
        cfg.method = Method.parse(args.via)
        cfg.monic = bool(args.monic)

    def _interpret_verify(self, args: Namespace, cfg: RunConfig) -> None:
        bounds = self.config.bounds
        cfg.suite = args.suite
        cfg.nvars = bounds.nvars if args.nvars is None else args.nvars
        cfg.max_degree = bounds.max_degree if args.max_degree is None else args.max_degree
        if cfg.nvars < 1:
            raise ValueError(f"--nvars must be at least 1, got {cfg.nvars}")
        if cfg.max_degree < 0:
            raise ValueError(f"--max-degree must be non-negative, got {cfg.max_degree}")

    def _interpret_kostka(self, args: Namespace, cfg: RunConfig) -> None:
        cfg.degree = args.degree
        cfg.allow_large = bool(args.allow_large)
        if cfg.degree < 0:
            raise ValueError(f"--degree must be non-negative, got {cfg.degree}")
        guard = self.config.max_kostka_degree
        if cfg.degree > guard and not cfg.allow_large:
            raise ValueError(f"--degree {cfg.degree} exceeds {guard}; pass --allow-large to run anyway")

    def _interpret_pieri(self, args: Namespace, cfg: RunConfig) -> None:
        # by default every vertical strip fits
        self._partition_and_nvars(args, cfg, extra=args.k)
        cfg.k = args.k
        cfg.explore = bool(args.explore)
        if not 1 <= cfg.k <= cfg.nvars:
            raise ValueError(f"--k must be in 1..{cfg.nvars}, got {cfg.k}")
