#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Fixtures compartilhadas dos testes do p2moduli.
"""

from pathlib import Path

import pytest

from p2moduli.exactalg import PrimeField, RationalField

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def gf() -> PrimeField:
    """Corpo primo padrão (p = 2³¹ − 1)."""
    return PrimeField()


@pytest.fixture
def qq() -> RationalField:
    return RationalField()


@pytest.fixture
def seven_on_conic_path() -> Path:
    """Configuração Q_6(7) distribuída com o repositório."""
    return ROOT / "data" / "seven_on_conic.json"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Remove sobrescritas de ambiente que mudariam os valores padrão."""
    for name in (
        "P2MODULI_PRIME",
        "P2MODULI_SEED",
        "P2MODULI_DEPTH_CAP",
        "P2MODULI_OUTPUT",
        "P2MODULI_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
