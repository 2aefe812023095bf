#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Utilitários para lidar com variáveis de ambiente e configuração.
"""

import os
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from p2moduli.errors import ConfigError

CONFIG_SECTIONS = ("arithmetic", "search", "random", "output", "logging", "interp")


def load_env(env_file: Optional[str] = None) -> bool:
    """
    Carrega variáveis de ambiente de um arquivo .env.

    Args:
        env_file (str, optional): Caminho para o arquivo .env. Se não especificado,
                                 tenta carregar .env no diretório atual.

    Returns:
        bool: True se o arquivo foi carregado, False caso contrário.
    """
    if env_file and os.path.exists(env_file):
        return load_dotenv(env_file)
    return load_dotenv()


def clean_env_value(value: Optional[str]) -> Optional[str]:
    """
    Limpa um valor de variável de ambiente, removendo comentários.

    Args:
        value (str): O valor da variável de ambiente.

    Returns:
        str: O valor limpo, sem comentários.
    """
    if value is None:
        return None
    if "#" in value:
        return value.split("#")[0].strip()
    return value.strip()


def _env_int(name: str, default: Optional[int]) -> Optional[int]:
    raw = clean_env_value(os.getenv(name))
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"Variável {name} não é um inteiro: {raw!r}") from exc


def default_config() -> Dict[str, Any]:
    """Configuração padrão, já com as sobrescritas de ambiente aplicadas."""
    return {
        "arithmetic": {
            "prime": _env_int("P2MODULI_PRIME", 2147483647),
            "rational": False,
        },
        "search": {
            "depth_cap": _env_int("P2MODULI_DEPTH_CAP", 64),
            "max_subset": 3,
        },
        "random": {
            "seed": _env_int("P2MODULI_SEED", 0),
        },
        "output": {
            "format": clean_env_value(os.getenv("P2MODULI_OUTPUT", "text")),
        },
        "logging": {
            "level": clean_env_value(os.getenv("P2MODULI_LOG_LEVEL", "warning")),
            "file": False,
            "dir": "logs",
        },
        "interp": {
            "twist_margin": 0,
        },
    }


def load_config(config_file: Optional[str] = None) -> Dict[str, Any]:
    """
    Carrega configurações de um arquivo YAML.

    Args:
        config_file (str, optional): Caminho para o arquivo de configuração.
                                    Se não especificado ou inexistente, retorna a
                                    configuração padrão.

    Returns:
        Dict[str, Any]: Configurações carregadas, seção por seção.
    """
    config = default_config()

    if config_file and os.path.exists(config_file):
        with open(config_file, "r", encoding="utf-8") as f:
            try:
                yaml_config = yaml.safe_load(f)
            except yaml.YAMLError as exc:
                raise ConfigError(f"YAML inválido em {config_file}: {exc}") from exc

        if yaml_config:
            if not isinstance(yaml_config, dict):
                raise ConfigError(f"{config_file} não contém um mapeamento")
            for section in CONFIG_SECTIONS:
                if section in yaml_config and yaml_config[section]:
                    config[section].update(yaml_config[section])

        # Variáveis de ambiente têm precedência sobre o arquivo
        for env_name, section, key in (
            ("P2MODULI_PRIME", "arithmetic", "prime"),
            ("P2MODULI_DEPTH_CAP", "search", "depth_cap"),
            ("P2MODULI_SEED", "random", "seed"),
        ):
            if os.getenv(env_name):
                config[section][key] = _env_int(env_name, None)
        if os.getenv("P2MODULI_OUTPUT"):
            config["output"]["format"] = clean_env_value(os.getenv("P2MODULI_OUTPUT"))
        if os.getenv("P2MODULI_LOG_LEVEL"):
            config["logging"]["level"] = clean_env_value(os.getenv("P2MODULI_LOG_LEVEL"))

    return config


def save_config(config: Dict[str, Any], output_file: str) -> bool:
    """
    Salva configurações em um arquivo YAML.

    Args:
        config (Dict[str, Any]): Configurações a serem salvas.
        output_file (str): Caminho para o arquivo de saída.

    Returns:
        bool: True se o arquivo foi salvo com sucesso, False caso contrário.
    """
    try:
        directory = os.path.dirname(output_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(output_file, "w", encoding="utf-8") as f:
            yaml.dump(config, f, default_flow_style=False, sort_keys=False)
        return True
    except OSError:
        return False
