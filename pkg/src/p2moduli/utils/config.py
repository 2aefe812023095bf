#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Modelo de configuração validado do p2moduli.

Recebe o dicionário seccionado produzido por env_utils.load_config (e as
sobrescritas da linha de comando) e o valida com pydantic.
"""

from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ValidationError, field_validator

from p2moduli.errors import ConfigError
from p2moduli.exactalg import DEFAULT_PRIME, Field, PrimeField, RationalField

# Bases suficientes para decidir primalidade de qualquer inteiro < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Teste de Miller-Rabin, determinístico para inteiros de 64 bits."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Config(BaseModel):
    """Configuração de uma execução."""

    prime: Optional[int] = DEFAULT_PRIME
    rational: bool = False
    seed: int = 0
    output: Literal["text", "tsv", "json"] = "text"
    depth_cap: int = 64
    max_subset: int = 3
    log_level: str = "warning"
    log_file: bool = False
    log_dir: str = "logs"
    twist_margin: int = 0

    @field_validator("prime")
    @classmethod
    def _check_prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not is_probable_prime(value):
            raise ValueError(f"{value} não é primo")
        return value

    @field_validator("depth_cap", "max_subset")
    @classmethod
    def _check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("deve ser >= 1")
        return value

    @classmethod
    def from_sections(cls, sections: Dict[str, Any], **overrides: Any) -> "Config":
        """
        Constrói a configuração a partir do dicionário seccionado.

        Args:
            sections: Saída de load_config.
            **overrides: Valores não nulos da linha de comando.

        Raises:
            ConfigError: Se algum valor é inválido.
        """
        flat: Dict[str, Any] = {
            "prime": sections.get("arithmetic", {}).get("prime", DEFAULT_PRIME),
            "rational": sections.get("arithmetic", {}).get("rational", False),
            "seed": sections.get("random", {}).get("seed", 0),
            "output": sections.get("output", {}).get("format", "text"),
            "depth_cap": sections.get("search", {}).get("depth_cap", 64),
            "max_subset": sections.get("search", {}).get("max_subset", 3),
            "log_level": sections.get("logging", {}).get("level", "warning"),
            "log_file": sections.get("logging", {}).get("file", False),
            "log_dir": sections.get("logging", {}).get("dir", "logs"),
            "twist_margin": sections.get("interp", {}).get("twist_margin", 0),
        }
        flat.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**flat)
        except ValidationError as exc:
            raise ConfigError(f"Configuração inválida: {exc}") from exc

    def working_field(self) -> Field:
        """Corpo de trabalho: QQ com --rational, senão o corpo primo configurado."""
        if self.rational or self.prime is None:
            return RationalField()
        return PrimeField(self.prime)
