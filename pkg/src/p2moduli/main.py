#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
p2moduli - Invariantes exatos de espaços de moduli de feixes em P²

Este é o arquivo principal que expõe cada computação como um subcomando.
Toda saída numérica é racional exata ("p/q"), em texto, TSV ou JSON.
"""

import argparse
import sys
import traceback
from datetime import datetime
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from p2moduli import __version__
from p2moduli.chern import LogChern, euler, ideal_points, std_char
from p2moduli.errors import ModuliError, ShapeError
from p2moduli.exactalg import Field, PolyMatrix
from p2moduli.exceptional import controlling
from p2moduli.gaeta import (
    GradedShape,
    divisorial_betti,
    gaeta_exponents,
    generalized_gaeta,
    mapping_cone_blocks,
    qk_shape,
    zero_locus_shape,
)
from p2moduli.interp import (
    check_orthogonal,
    interpolating_tangential,
    interpolating_triangular,
    tangent_section_count,
)
from p2moduli.points import (
    DETECTORS,
    BettiTable,
    PointConfig,
    auto_detectors,
    betti_table,
    dependent_twelve_matrix,
    detect_admissible,
    generate_config,
    ideal_dim,
    random_hilbert_burch,
    syzygy_matrix,
)
from p2moduli.sbld_data import SUPPORTED
from p2moduli.utils.config import Config
from p2moduli.utils.env_utils import load_config, load_env
from p2moduli.utils.logger import ModuliLogger
from p2moduli.utils.serialization import dumps, fmt_q, q_json, tsv
from p2moduli.walls import (
    eff_extremal,
    movable_extremal,
    sbld_table,
    slope_of_interp_tangential,
    slope_of_interp_triangular,
)

# Saída de dados (stdout); diagnósticos vão para o console do logger (stderr)
out = Console(highlight=False, soft_wrap=True)
err = Console(stderr=True, highlight=False)
# Tabelas SBLD com largura fixa: a saída não depende de COLUMNS nem do terminal
TABLE_WIDTH = 200
table_out = Console(width=TABLE_WIDTH, highlight=False)

GENERIC_NOTE = (
    "anulamento numa instância aleatória certifica o membro geral da família"
)


# -----------------------------------------------
# Argumentos
# -----------------------------------------------

def _add_points_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", dest="points", help="JSON da configuração de pontos")
    sub.add_argument(
        "--spec",
        choices=["general", "collinear", "on_conic", "on_cubic"],
        default="general",
        help="Família gerada quando --config não é dado",
    )
    sub.add_argument("--n", type=int, help="Número de pontos")
    sub.add_argument("--k", type=int, help="Pontos na curva especial")
    sub.add_argument("--node", action="store_true", help="Inclui o nó da cúbica nodal")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p2moduli",
        description="p2moduli - Invariantes exatos de espaços de moduli de feixes em P²",
    )
    parser.add_argument(
        "-c", "--config",
        dest="settings",
        default="config.yaml",
        help="Arquivo de configuração YAML (padrão: config.yaml)",
    )
    parser.add_argument("--output", choices=["text", "tsv", "json"], help="Formato de saída")
    parser.add_argument("--prime", type=int, help="Característica do corpo de trabalho")
    parser.add_argument("--seed", type=int, help="Semente das instâncias aleatórias")
    parser.add_argument("--rational", action="store_true", default=None, help="Trabalha sobre QQ")
    parser.add_argument("-v", "--verbose", action="store_true", help="Modo verboso")

    subs = parser.add_subparsers(dest="command", metavar="COMANDO")

    p = subs.add_parser("char", help="Caráter (r, μ, Δ), ch e χ de um objeto padrão")
    p.add_argument("kind", choices=["line", "tangent", "ideal", "exc", "custom"])
    p.add_argument("args", nargs="*", help="k | k | n [k] | inclinação | r μ Δ")

    for name, text in (
        ("controlling", "Fibrado excepcional controlador de I_n"),
        ("gaeta", "Resolução de Gaeta de I_n"),
        ("gengaeta", "Resolução de Gaeta generalizada de I_n"),
        ("blocks", "Blocos F e W do cone de mapeamento"),
        ("walls", "Paredes de Bridgeland da tabela embutida"),
        ("sbld", "Tabela de decomposição em lugares de base"),
        ("mov", "Raios extremais de Eff e Mov"),
    ):
        p = subs.add_parser(name, help=text)
        p.add_argument("--n", type=int, required=True, help="Comprimento do esquema")

    for name, text in (
        ("betti", "Tabela de Betti de uma configuração de pontos"),
        ("syzygy", "Matriz de sizígias minimal"),
        ("detect", "Detectores de admissibilidade"),
    ):
        p = subs.add_parser(name, help=text)
        _add_points_args(p)
        if name == "detect":
            p.add_argument("--detector", choices=list(DETECTORS), help="Detector (padrão: automático)")

    p = subs.add_parser("interp", help="Ortogonalidade cohomológica em D_Betti")
    p.add_argument("kind", choices=["triangular", "tangential", "sections"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--structured", action="store_true", help="Matriz estruturada (tangencial)")

    subs.add_parser("selftest", help="Executa as verificações de aceitação")
    subs.add_parser("version", help="Mostra a versão")
    return parser


# -----------------------------------------------
# Saída
# -----------------------------------------------

def _emit(cfg: Config, text: str, document: Any, rows: Optional[List[List[Any]]] = None) -> None:
    if cfg.output == "json":
        sys.stdout.write(dumps(document) + "\n")
    elif cfg.output == "tsv":
        sys.stdout.write(tsv(rows if rows is not None else [[text]]) + "\n")
    else:
        out.print(text, markup=False, emoji=False)


CHAR_KINDS = {"line": "line", "tangent": "tangent", "ideal": "ideal_points", "exc": "exceptional"}


def _char_of(kind: str, args: Sequence[str]) -> LogChern:
    try:
        values = [Fraction(a) for a in args]
    except ValueError as exc:
        raise ShapeError(f"Valor racional inválido em {' '.join(args)}") from exc
    if kind == "custom":
        if len(values) != 3:
            raise ShapeError("custom exige r μ Δ")
        return LogChern(*values)
    if kind in ("line", "tangent", "ideal"):
        if any(v.denominator != 1 for v in values):
            raise ShapeError(f"{kind} exige argumentos inteiros")
        values = [Fraction(int(v)) for v in values]
    try:
        return std_char(CHAR_KINDS[kind], *values)
    except TypeError as exc:
        raise ShapeError(f"Argumentos inválidos para {kind}: {' '.join(args)}") from exc


# -----------------------------------------------
# Subcomandos
# -----------------------------------------------

def cmd_char(args: argparse.Namespace, cfg: Config) -> int:
    xi = _char_of(args.kind, args.args)
    r, c1, c2 = xi.ch()
    chi = euler(xi)
    text = f"{xi}  ch = ({fmt_q(r)}, {fmt_q(c1)}, {fmt_q(c2)})  χ = {fmt_q(chi)}"
    doc = {**xi.to_json(), "chi": fmt_q(chi)}
    _emit(cfg, text, doc, [["r", "mu", "delta", "c1", "ch2", "chi"], [xi.r, xi.mu, xi.delta, c1, c2, chi]])
    return 0


def cmd_controlling(args: argparse.Namespace, cfg: Config) -> int:
    e = controlling(ideal_points(args.n), cfg.depth_cap)
    text = f"{fmt_q(e.slope)} (rank {e.rank})"
    _emit(cfg, text, {"n": args.n, "slope": q_json(e.slope), "rank": e.rank}, [[args.n, e.slope, e.rank]])
    return 0


def cmd_gaeta(args: argparse.Namespace, cfg: Config) -> int:
    g = gaeta_exponents(args.n)
    text = f"{g.shape}   (n1, n2, n3) = ({g.n1}, {g.n2}, {g.n3})"
    doc = {"n": args.n, "exponents": [g.n1, g.n2, g.n3], **g.shape.to_json()}
    _emit(cfg, text, doc, [[args.n, g.n1, g.n2, g.n3, str(g.shape)]])
    return 0


def cmd_gengaeta(args: argparse.Namespace, cfg: Config) -> int:
    gg = generalized_gaeta(ideal_points(args.n), cfg.depth_cap)
    text = f"{gg}   [{gg.sign}, E_{{{fmt_q(gg.controlling.slope)}}}, m = ({gg.m1}, {gg.m2}, {gg.m3})]"
    _emit(cfg, text, {"n": args.n, **gg.to_json()}, [[args.n, gg.sign, gg.m1, gg.m2, gg.m3, str(gg)]])
    return 0


def cmd_blocks(args: argparse.Namespace, cfg: Config) -> int:
    blocks = mapping_cone_blocks(ideal_points(args.n), cfg.depth_cap)
    text = f"quadro d = {blocks.frame}\nF: {blocks.f_block}\nW: {blocks.residual}"
    rows = [["F", str(blocks.f_block)], ["W", str(blocks.residual)]]
    _emit(cfg, text, {"n": args.n, **blocks.to_json()}, rows)
    return 0


def cmd_walls(args: argparse.Namespace, cfg: Config) -> int:
    table = sbld_table(args.n)
    if cfg.output == "tsv":
        sys.stdout.write(table.walls_tsv() + "\n")
        return 0
    doc = {"n": args.n, "walls": [w.to_json() for w in table.walls]}
    lines = [f"{w.center}: {', '.join(name for name, _ in w.destabs)}" for w in table.walls]
    _emit(cfg, "\n".join(lines), doc)
    return 0


def cmd_sbld(args: argparse.Namespace, cfg: Config) -> int:
    table = sbld_table(args.n)
    if cfg.output == "json":
        _emit(cfg, "", table.to_json())
        return 0
    if cfg.output == "tsv":
        sys.stdout.write(table.to_tsv() + "\n")
        return 0
    grid = Table(title=f"n = {args.n}")
    for col in ("Geometria", "Betti", "Desestab.", "V", "Bs(D_V)", "μ", "x"):
        grid.add_column(col, no_wrap=True, overflow="fold")
    for row in table.rows:
        grid.add_row(
            ("- " if row.dashed else "") + row.geometry,
            row.betti_id,
            row.destab_name,
            f"{row.interp_name}: {row.interp}",
            " ∪ ".join(row.base_locus) or "∅",
            fmt_q(row.mu),
            fmt_q(row.wall.x),
        )
    table_out.print(grid)
    return 0


def cmd_mov(args: argparse.Namespace, cfg: Config) -> int:
    eff = eff_extremal(args.n, cfg.depth_cap)
    doc: Dict[str, Any] = {"n": args.n, "eff": q_json(eff.slope)}
    text = f"Eff: {eff} (μ = {fmt_q(eff.slope)})"
    rows: List[List[Any]] = [["eff", eff.slope]]
    try:
        mov = movable_extremal(args.n)
    except ModuliError as exc:
        text += f"\nMov: indisponível ({exc})"
        doc["mov"] = None
    else:
        text += f"\nMov: {mov} (μ = {fmt_q(mov.slope)})"
        doc["mov"] = q_json(mov.slope)
        rows.append(["mov", mov.slope])
    _emit(cfg, text, doc, rows)
    return 0


def _load_points(args: argparse.Namespace, cfg: Config, fld: Field) -> PointConfig:
    if args.points:
        return PointConfig.load(args.points)
    if args.n is None:
        raise ModuliError("Informe --config ou --n")
    return generate_config(args.spec, args.n, cfg.seed, fld, args.k, include_node=args.node)  # type: ignore[return-value]


def _verdicts(pm: PolyMatrix, cfg: Config) -> List[str]:
    found = []
    for name in auto_detectors(pm):
        detection = detect_admissible(pm, name, max_subset=cfg.max_subset)
        if detection.admissible:
            found.append(detection.verdict())
    return found


def _table_label(n: int, table: BettiTable) -> Optional[str]:
    if n not in SUPPORTED:
        return None
    return sbld_table(n).betti_id(table.shape())


def cmd_betti(args: argparse.Namespace, cfg: Config) -> int:
    z = _load_points(args, cfg, cfg.working_field())
    table = betti_table(z)
    label = _table_label(z.length, table)
    verdicts = _verdicts(syzygy_matrix(z, table), cfg) if z.length >= 3 else []
    head = f"{label}: {table}" if label else str(table)
    text = "\n".join([head] + verdicts)
    doc = {"n": z.length, "label": z.label, "table": label, **table.to_json(), "admissible": verdicts}
    _emit(cfg, text, doc, [[z.length, label or "", str(table)] + verdicts])
    return 0


def _matrix_rows(pm: PolyMatrix) -> List[List[str]]:
    return [[repr(pm.entry(i, j)) for j in range(pm.shape[1])] for i in range(pm.shape[0])]


def cmd_syzygy(args: argparse.Namespace, cfg: Config) -> int:
    z = _load_points(args, cfg, cfg.working_field())
    pm = syzygy_matrix(z)
    header = [f"O(-{r})" for r in pm.row_twists]
    text = "\n".join(
        f"{header[i]}: " + " | ".join(row) for i, row in enumerate(_matrix_rows(pm))
    )
    doc = {"rows": list(pm.row_twists), "cols": list(pm.col_twists), "entries": _matrix_rows(pm)}
    _emit(cfg, text, doc, _matrix_rows(pm))
    return 0


def cmd_detect(args: argparse.Namespace, cfg: Config) -> int:
    z = _load_points(args, cfg, cfg.working_field())
    pm = syzygy_matrix(z)
    names = [args.detector] if args.detector else auto_detectors(pm)
    results = [detect_admissible(pm, name, max_subset=cfg.max_subset) for name in names]
    text = "\n".join(f"{r.detector}: {r.verdict()}" for r in results) or "nenhum detector aplicável"
    doc = [{"detector": r.detector, "target": r.target, "admissible": r.admissible, "witness": r.witness} for r in results]
    _emit(cfg, text, doc, [[r.detector, r.target, r.admissible] for r in results])
    return 0


def cmd_interp(args: argparse.Namespace, cfg: Config, logger: ModuliLogger) -> int:
    fld = cfg.working_field()
    d, k = args.d, args.k
    n = d * (d + 1) // 2 if args.kind == "triangular" else 2 * d * (d + 1)
    if args.kind == "sections":
        z = random_hilbert_burch(qk_shape(d, k), fld, cfg.seed, f"qk({d},{k})")
    else:
        z = random_hilbert_burch(divisorial_betti(n), fld, cfg.seed, f"D_Betti({n})")
    logger.log_step_start(f"interp {args.kind} d={d} k={k} (n={n})")
    if args.kind == "sections":
        count = tangent_section_count(z, d, twist_margin=cfg.twist_margin, seed=cfg.seed)
        text = f"h⁰(T({2 * d - 2}) ⊗ I_Z) = {count}   (Z ∈ {z.label})"
        doc: Dict[str, Any] = {"d": d, "k": k, "n": n, "sections": count}
    else:
        if args.kind == "triangular":
            M = interpolating_triangular(d, k, fld, cfg.seed)
        else:
            M = interpolating_tangential(d, k, fld, cfg.seed, args.structured)
        verdict = check_orthogonal(M, z, twist_margin=cfg.twist_margin, seed=cfg.seed)
        text = f"{M.label}: {M.shape()} vs Z ∈ {z.label}: {verdict}\n({GENERIC_NOTE})"
        doc = {"d": d, "k": k, "n": n, "bundle": M.label, "verdict": str(verdict), "field": fld.to_json()}
    logger.log_step_end(f"interp {args.kind}")
    _emit(cfg, text, doc, [[args.kind, d, k, n, text.splitlines()[0]]])
    return 0


# -----------------------------------------------
# Autoteste
# -----------------------------------------------

def _selftest_checks(cfg: Config) -> List[Tuple[str, Callable[[], bool]]]:
    fld = cfg.working_field()

    def controlling_values() -> bool:
        got = [controlling(ideal_points(n), cfg.depth_cap) for n in (7, 163, 165, 2896)]
        expected = [Fraction(12, 5), Fraction(83, 5), Fraction(17), Fraction(14475, 194)]
        if [e.slope for e in got] != expected:
            return False
        return got[-1].char() == LogChern(194, Fraction(14475, 194), Fraction(37635, 75272))

    def gaeta_shapes() -> bool:
        expected = {
            7: GradedShape(((-5, 1), (-4, 1)), ((-3, 3),)),
            163: GradedShape(((-19, 10),), ((-18, 3), (-17, 8))),
            165: GradedShape(((-19, 12),), ((-18, 7), (-17, 6))),
            2896: GradedShape(((-77, 46),), ((-76, 17), (-75, 30))),
        }
        return all(gaeta_exponents(n).shape == shape for n, shape in expected.items())

    def generalized() -> bool:
        texts = [str(generalized_gaeta(ideal_points(n), cfg.depth_cap)) for n in (163, 2896)]
        return texts == ["T(-21)^3 → O(-17)^2 ⊕ E_{-83/5}", "E_{-388/5}^5 → E_{-970/13}^2"]

    def blocks() -> bool:
        small = mapping_cone_blocks(ideal_points(163), cfg.depth_cap)
        large = mapping_cone_blocks(ideal_points(2896), cfg.depth_cap)
        return (
            small.f_block == GradedShape(((-19, 1),), ((-17, 6),))
            and small.residual == GradedShape(((-19, 9),), ((-18, 3), (-17, 2)))
            and large.f_block == GradedShape(((-77, 6),), ((-76, 2), (-75, 30)))
            and large.residual == GradedShape(((-77, 40),), ((-76, 15),))
        )

    def tables() -> bool:
        return all(sbld_table(n).rows for n in SUPPORTED)

    def walls_12() -> bool:
        centers = [w.center.x for w in sbld_table(12).walls]
        return len(centers) == 13 and centers[0] == -5 and centers[-1] == Fraction(-25, 2)

    def movable() -> bool:
        if movable_extremal(12).slope != Fraction(25, 7) or movable_extremal(10).slope != Fraction(10, 3):
            return False
        for d in range(3, 51):
            triangular = movable_extremal(d * (d + 1) // 2).slope
            tangential = movable_extremal(2 * d * (d + 1)).slope
            if triangular != Fraction(d * d - 2 * d + 2, d - 1):
                return False
            if tangential != Fraction(8 * d * d - 4 * d + 1, 4 * d - 1):
                return False
            if (triangular, tangential) != (slope_of_interp_triangular(d), slope_of_interp_tangential(d)):
                return False
        return True

    def betti_general() -> bool:
        z = generate_config("general", 7, cfg.seed, fld)
        return str(betti_table(z)) == str(gaeta_exponents(7).shape)

    def detectors_seven() -> bool:
        general = syzygy_matrix(generate_config("general", 7, cfg.seed, fld))
        conic = syzygy_matrix(generate_config("on_conic", 7, cfg.seed, fld, k=6))
        collinear = betti_table(generate_config("collinear", 7, cfg.seed, fld, k=4))
        return (
            detect_admissible(general, "n7_T").admissible
            and detect_admissible(conic, "n7_I1").admissible
            and sbld_table(7).betti_id(collinear.shape()) == "G_1"
        )

    def detectors_twelve() -> bool:
        for dependent, detector in (("l1_l3", "n12_I1"), ("l4_l5", "n12_I7")):
            pm = dependent_twelve_matrix(fld, dependent, cfg.seed)
            z = generate_config("hilbert_burch", 12, matrix=pm)
            table = betti_table(z)
            if sbld_table(12).betti_id(table.shape()) != "G_1":
                return False
            if not detect_admissible(syzygy_matrix(z, table), detector).admissible:
                return False
        return True

    def sections_qk() -> bool:
        for d, k in ((2, 1), (2, 2), (3, 1), (3, 2)):
            z = random_hilbert_burch(qk_shape(d, k), fld, cfg.seed)
            if tangent_section_count(z, d, twist_margin=cfg.twist_margin, seed=cfg.seed) != k:
                return False
        return True

    def zero_locus() -> bool:
        return all(
            ideal_dim(random_hilbert_burch(zero_locus_shape(d), fld, cfg.seed), 4 * d - 4).h0
            == 4 * d * d - 8 * d + 3
            for d in (2, 3)
        )

    def orthogonal_tangential() -> bool:
        for d in (2, 3):
            z = random_hilbert_burch(divisorial_betti(2 * d * (d + 1)), fld, cfg.seed)
            M = interpolating_tangential(d, fld=fld, seed=cfg.seed + 1)
            verdict = check_orthogonal(M, z, twist_margin=cfg.twist_margin, seed=cfg.seed)
            if verdict.kind != "orthogonal":
                return False
        return True

    return [
        ("controlling n=7, 163, 165, 2896", controlling_values),
        ("Gaeta n=7, 163, 165, 2896", gaeta_shapes),
        ("Gaeta generalizada n=163, 2896", generalized),
        ("blocos F/W n=163, 2896", blocks),
        ("tabelas SBLD verificadas", tables),
        ("paredes n=12", walls_12),
        ("Mov: fórmulas fechadas 3 <= d <= 50", movable),
        ("Betti de 7 pontos gerais", betti_general),
        ("detectores n=7", detectors_seven),
        ("detectores n=12", detectors_twelve),
        ("seções de T(2d−2) em qk(d,k)", sections_qk),
        ("h⁰(I_Γ(4d−4)) para d=2, 3", zero_locus),
        ("h⁰(M ⊗ I_Z) = 0 tangencial d=2, 3", orthogonal_tangential),
    ]


def cmd_selftest(args: argparse.Namespace, cfg: Config, logger: ModuliLogger) -> int:
    grid = Table(title="selftest")
    grid.add_column("Verificação")
    grid.add_column("Resultado")
    failures = 0
    checks = _selftest_checks(cfg)
    progress, task = logger.create_progress_bar("selftest", total=len(checks))
    with progress:
        for name, check in checks:
            logger.log_step_start(name)
            try:
                ok = check()
            except ModuliError as exc:
                ok = False
                logger.error(f"{name}: {type(exc).__name__}: {exc}")
            logger.log_step_end(name, "sucesso" if ok else "falha")
            failures += 0 if ok else 1
            grid.add_row(name, "[green]ok[/green]" if ok else "[red]FALHA[/red]")
            progress.advance(task)
    out.print(grid)
    return 1 if failures else 0


# -----------------------------------------------
# Função principal exposta para o CLI
# -----------------------------------------------

SIMPLE = {
    "char": cmd_char,
    "controlling": cmd_controlling,
    "gaeta": cmd_gaeta,
    "gengaeta": cmd_gengaeta,
    "blocks": cmd_blocks,
    "walls": cmd_walls,
    "sbld": cmd_sbld,
    "mov": cmd_mov,
    "betti": cmd_betti,
    "syzygy": cmd_syzygy,
    "detect": cmd_detect,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Ponto de entrada principal para o p2moduli."""
    load_env()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command is None:
        out.print(Panel(
            f"[bold yellow]p2moduli v{__version__}[/bold yellow]\n\n"
            "Invariantes exatos de espaços de moduli de feixes em P²\n\n"
            "[cyan]Exemplos:[/cyan]\n"
            "  p2moduli controlling --n 7\n"
            "  p2moduli sbld --n 12 --output tsv\n"
            "  p2moduli betti --config data/seven_on_conic.json\n\n"
            "[cyan]Para mais informações:[/cyan]\n"
            "  p2moduli --help",
            title="[bold green]p2moduli[/bold green]",
            border_style="green",
        ))
        return 0
    if args.command == "version":
        out.print(f"p2moduli v{__version__}")
        return 0

    try:
        cfg = Config.from_sections(
            load_config(args.settings),
            output=args.output,
            prime=args.prime,
            seed=args.seed,
            rational=args.rational,
            log_level="debug" if args.verbose else None,
        )
        logger = ModuliLogger(
            log_level=cfg.log_level,
            enable_file_logging=cfg.log_file,
            log_dir=cfg.log_dir,
            execution_id=datetime.now().strftime("%Y%m%d_%H%M%S"),
        )
        if args.command == "interp":
            return cmd_interp(args, cfg, logger)
        if args.command == "selftest":
            return cmd_selftest(args, cfg, logger)
        return SIMPLE[args.command](args, cfg)
    except ModuliError as e:
        err.print(f"[bold red]Erro:[/bold red] {type(e).__name__}: {escape(str(e))}")
        if args.verbose:
            err.print(traceback.format_exc())
        return 1


# Executa quando rodado diretamente
if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
