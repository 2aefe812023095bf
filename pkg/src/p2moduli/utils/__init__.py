# Pacote de utilitários do p2moduli

from .logger import ModuliLogger
from .env_utils import load_config, load_env, save_config
from .serialization import dumps, fmt_map, fmt_q, parse_q, tsv
