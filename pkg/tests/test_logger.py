#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Testes do ModuliLogger.
"""

import logging

import pytest
from rich.progress import Progress

from p2moduli.utils.logger import ModuliLogger


@pytest.fixture
def file_logger(tmp_path):
    logger = ModuliLogger(
        log_level="debug",
        enable_file_logging=True,
        log_dir=str(tmp_path),
        execution_id="teste",
        enable_console=False,
    )
    yield logger
    for handler in logger.logger.handlers:
        handler.close()
    logger.logger.handlers = []


def test_unknown_level_falls_back_to_warning():
    """Testa que um nível desconhecido vira WARNING."""
    logger = ModuliLogger(log_level="verbose", enable_console=False)
    assert logger.log_level == logging.WARNING
    assert logger.logger.handlers == []


def test_file_logging(file_logger, tmp_path):
    """Testa a escrita no arquivo de log da execução."""
    file_logger.info("rank 5")
    content = (tmp_path / "teste.log").read_text(encoding="utf-8")
    assert "[INFO] p2moduli" in content
    assert "rank 5" in content


def test_child_logger_propagates(file_logger, tmp_path):
    """Testa que loggers de módulo escrevem no arquivo da raiz."""
    child = file_logger.get_child_logger("gaeta")
    assert child.name == "p2moduli.gaeta"
    child.debug("blocos calculados")
    assert "blocos calculados" in (tmp_path / "teste.log").read_text(encoding="utf-8")


def test_steps_without_console(file_logger, tmp_path):
    """Testa os painéis de etapa registrados apenas no arquivo."""
    file_logger.log_step_start("paredes")
    file_logger.log_step_end("paredes", "falha", "13 esperadas")
    content = (tmp_path / "teste.log").read_text(encoding="utf-8")
    assert "--- Início de Etapa ---" in content
    assert "Etapa paredes concluída com falha" in content
    assert "13 esperadas" in content


def test_progress_bar(file_logger):
    """Testa a criação da barra de progresso desabilitada."""
    progress, task = file_logger.create_progress_bar("eliminação", total=3)
    assert isinstance(progress, Progress)
    with progress:
        progress.advance(task)
    assert progress.tasks[0].completed == 1
    assert progress.tasks[0].total == 3
