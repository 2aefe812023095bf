#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de logging para o p2moduli.

Este módulo fornece funcionalidades de logging, incluindo:
- Logs em console com cores (Rich)
- Logs em arquivo com rotação
- Painéis de início/fim de etapa para o selftest e computações longas
- Barras de progresso para eliminações grandes
"""

import os
import logging
from datetime import datetime
from logging.handlers import RotatingFileHandler
from typing import Any, Optional, Tuple

from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn, TaskID

# Console de diagnóstico; a saída de dados dos subcomandos vai para stdout
console = Console(stderr=True)

ROOT_LOGGER_NAME = "p2moduli"


class ModuliLogger:
    """
    Classe para gerenciar logs da aplicação com suporte a console e arquivo.
    """

    # Níveis de log
    LEVELS = {
        "debug": logging.DEBUG,
        "info": logging.INFO,
        "warning": logging.WARNING,
        "error": logging.ERROR,
        "critical": logging.CRITICAL,
    }

    # Tamanho máximo dos arquivos de log (10MB)
    MAX_LOG_SIZE = 10 * 1024 * 1024

    # Número máximo de backups de logs
    MAX_LOG_BACKUPS = 5

    def __init__(
        self,
        log_level: str = "warning",
        enable_file_logging: bool = False,
        log_dir: str = "logs",
        execution_id: Optional[str] = None,
        enable_console: bool = True,
        log_rotation: bool = True,
    ):
        """
        Inicializa o logger.

        Args:
            log_level (str): Nível de log (debug, info, warning, error, critical).
            enable_file_logging (bool): Se True, habilita logs em arquivo.
            log_dir (str): Diretório para armazenar logs.
            execution_id (str): ID da execução atual.
            enable_console (bool): Se True, habilita logs no console (stderr).
            log_rotation (bool): Se True, habilita rotação de arquivos de log.
        """
        self.log_level = self.LEVELS.get(str(log_level).lower(), logging.WARNING)
        self.enable_file_logging = enable_file_logging
        self.log_dir = log_dir
        self.execution_id = execution_id or datetime.now().strftime("%Y%m%d_%H%M%S")
        self.enable_console = enable_console
        self.log_file: Optional[str] = None

        self.logger = logging.getLogger(ROOT_LOGGER_NAME)
        self.logger.setLevel(self.log_level)
        self.logger.handlers = []  # Limpar handlers para evitar duplicação

        log_format = "%(asctime)s [%(levelname)s] %(name)s:%(lineno)d - %(message)s"

        if enable_console:
            console_handler = RichHandler(
                console=console,
                rich_tracebacks=True,
                markup=False,
                show_path=False,
                omit_repeated_times=False,
            )
            console_handler.setLevel(self.log_level)
            self.logger.addHandler(console_handler)

        if enable_file_logging:
            os.makedirs(log_dir, exist_ok=True)
            self.log_file = os.path.join(log_dir, f"{self.execution_id}.log")

            file_handler: logging.Handler
            if log_rotation:
                file_handler = RotatingFileHandler(
                    self.log_file,
                    maxBytes=self.MAX_LOG_SIZE,
                    backupCount=self.MAX_LOG_BACKUPS,
                    encoding="utf-8",
                )
            else:
                file_handler = logging.FileHandler(self.log_file, encoding="utf-8")

            file_handler.setLevel(self.log_level)
            file_handler.setFormatter(logging.Formatter(log_format))
            self.logger.addHandler(file_handler)

    def get_child_logger(self, name: str) -> logging.Logger:
        """
        Obtém um logger filho com um nome específico.

        Args:
            name (str): Nome do logger filho (normalmente o nome do módulo).

        Returns:
            logging.Logger: Logger filho.
        """
        return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")

    def debug(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.debug(message, *args, **kwargs)

    def info(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.info(message, *args, **kwargs)

    def warning(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.warning(message, *args, **kwargs)

    def error(self, message: str, *args: Any, **kwargs: Any) -> None:
        self.logger.error(message, *args, **kwargs)

    def log_rich(self, panel_content: str, title: Optional[str] = None, style: str = "green") -> None:
        """
        Exibe um painel formatado usando Rich no console.

        Args:
            panel_content (str): Conteúdo do painel.
            title (str, optional): Título do painel.
            style (str, optional): Estilo do painel.
        """
        if self.enable_console:
            console.print(Panel(panel_content, title=title, style=style))

        if self.enable_file_logging:
            if title:
                self.logger.info(f"--- {title} ---")
            self.logger.info(panel_content)

    def log_step_start(self, step_name: str) -> None:
        """
        Registra o início de uma etapa (ex.: um grupo do selftest).

        Args:
            step_name (str): Nome da etapa.
        """
        self.log_rich(f"Iniciando etapa: {step_name}", title="Início de Etapa", style="blue")

    def log_step_end(self, step_name: str, status: str = "sucesso", details: Optional[str] = None) -> None:
        """
        Registra o fim de uma etapa.

        Args:
            step_name (str): Nome da etapa.
            status (str): Status da conclusão (sucesso/falha).
            details (str, opcional): Detalhes adicionais.
        """
        style = "green" if status == "sucesso" else "red"
        content = f"Etapa {step_name} concluída com {status}"
        if details:
            content += f"\n\n{details}"
        self.log_rich(content, title="Fim de Etapa", style=style)

    def create_progress_bar(self, description: str, total: Optional[int] = None) -> Tuple[Progress, TaskID]:
        """
        Cria uma barra de progresso para operações de longa duração.

        Args:
            description (str): Descrição da operação
            total (int, optional): Total de passos (None para progresso indeterminado)

        Returns:
            tuple: (Progress object, task_id) para atualização
        """
        progress = Progress(
            SpinnerColumn(),
            TextColumn("[bold blue]{task.description}"),
            BarColumn(complete_style="green"),
            TextColumn("[progress.percentage]{task.percentage:>3.0f}%"),
            console=console,
            disable=not self.enable_console,
        )
        task_id = progress.add_task(description, total=total)
        return progress, task_id
