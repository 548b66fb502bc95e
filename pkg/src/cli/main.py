"""
Typer-based CLI application entry point
"""
import json
from pathlib import Path
from typing import Any, Dict, List, NoReturn, Optional

import typer
from rich import box
from rich.panel import Panel
from rich.table import Table

from ..core.constants import DEFAULT_SCAN_PRIMES, SUITE_ALL
from ..core.config_manager import get_default_config_manager
from ..core.error_handler import ErrorHandler
from ..core.errors import DomainError, PascalianError
from ..models.curve import CurveSpec
from ..models.run_config import RunConfig
from ..utils import console, err_console, print_success, save_timing_log

app = typer.Typer(
    name="pascalian",
    help="Pascalian numbers and polynomials: tableaux, identities, roots and limit curves",
    add_completion=False,
    rich_markup_mode="rich",
)


@app.callback()
def main(
    ctx: typer.Context,
    output_format: Optional[str] = typer.Option(None, "--format", "-f", help="출력 형식: csv | json | svg"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="출력 파일 경로 (없으면 표준 출력)"),
    tol_residual: Optional[float] = typer.Option(None, "--tol-residual", help="근 정규화 잔차 허용 오차"),
    tol_imag: Optional[float] = typer.Option(None, "--tol-imag", help="실근/허근 판정 허용 오차"),
    seed: Optional[int] = typer.Option(None, "--seed", help="예약됨 (근 계산기는 결정적)"),
):
    """
    전역 옵션은 모든 명령에 적용됩니다.
    """
    ctx.obj = {
        "output_format": output_format,
        "out": out,
        "residual": tol_residual,
        "imag": tol_imag,
        "seed": seed,
    }


def _fail(command: str, error: Exception, n: Optional[int] = None) -> NoReturn:
    ErrorHandler.handle_node_error(command, error, n=n, context=f"cmd_{command}")
    raise typer.Exit(code=1)


def _run_config(ctx: typer.Context, command: str) -> RunConfig:
    try:
        return get_default_config_manager().build_run_config(command=command, **(ctx.obj or {}))
    except PascalianError as e:
        _fail(command, e)


def _explicit_format(ctx: typer.Context) -> Optional[str]:
    return (ctx.obj or {}).get("output_format")


def _emit(text: str, config: RunConfig) -> None:
    """--out 이 있으면 파일로, 없으면 표준 출력으로"""
    from ..services.export_service import write_output

    path = write_output(text, config.out)
    if path is None:
        typer.echo(text, nl=False)
    else:
        print_success(f"Wrote {path}")


def _finish(passed: bool) -> None:
    err_console.print("[bold green]PASS[/bold green]" if passed else "[bold red]FAIL[/bold red]")
    if not passed:
        raise typer.Exit(code=1)


@app.command()
def triangle(
    ctx: typer.Context,
    n_max: int = typer.Option(5, "--n-max", help="마지막 행 번호"),
    sums: bool = typer.Option(False, "--sums", help="행 합 (2^n) 열 추가"),
):
    """
    정렬된 파스칼 삼각형 (파스칼리안 수) 의 0..n_max 행을 출력합니다.
    """
    from ..services.combinatorics_service import triangle_entries, triangle_row
    from ..services.export_service import to_csv, to_json

    config = _run_config(ctx, "triangle")
    if n_max < 0:
        _fail("triangle", DomainError(f"--n-max must be nonnegative, got {n_max}"))

    fmt = _explicit_format(ctx)
    if fmt in ("csv", "json"):
        entries = [e.to_dict() for n in range(n_max + 1) for e in triangle_entries(n)]
        text = to_csv(entries, ("n", "k", "value")) if fmt == "csv" else to_json(entries, config.meta())
        _emit(text, config)
        return
    if fmt == "svg":
        _fail("triangle", DomainError("triangle has no svg output"))

    lines = []
    for n in range(n_max + 1):
        row = triangle_row(n)
        line = f"{n}: " + " ".join(str(v) for v in row)
        if sums:
            line += f"  (sum {sum(row)})"
        lines.append(line)
    _emit("\n".join(lines) + "\n", config)


@app.command()
def bijection(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="도미노 개수 n (열거 상한 이하)"),
):
    """
    B_n 의 모든 타블로에 대해 φ(T) 와 세 가지 통계를 표로 보여줍니다.
    """
    from ..services.combinatorics_service import CombinatoricsService
    from ..services.export_service import to_csv, to_json

    config = _run_config(ctx, "bijection")
    service = CombinatoricsService(config.enumeration_cap)
    try:
        rows = service.bijection_rows(n)
        passed = service.check_bijection(n)
    except PascalianError as e:
        _fail("bijection", e, n=n)

    flat = [
        {
            "subset": row["subset"],
            "row1": row["shape"][0],
            "row2": row["shape"][1],
            "walk": row["walk"],
            "height": row["height"],
            **row["checks"],
            "ok": row["ok"],
        }
        for row in rows
    ]
    fmt = _explicit_format(ctx)
    if fmt == "csv":
        columns = ("subset", "row1", "row2", "walk", "height", "up_steps", "equal_rows", "shape_height", "inverse", "ok")
        _emit(to_csv(flat, columns), config)
    elif fmt == "json":
        _emit(to_json({"n": n, "rows": flat, "passed": passed}, config.meta()), config)
    else:
        table = Table(title=f"φ : B_{n} → D_{n}", box=box.ROUNDED, show_header=True, header_style="bold magenta")
        table.add_column("subset", style="cyan")
        table.add_column("shape", justify="center")
        table.add_column("walk", style="green")
        table.add_column("height", justify="right")
        table.add_column("checks", justify="center")
        for row in flat:
            table.add_row(
                row["subset"],
                f"({row['row1']}, {row['row2']})",
                row["walk"] or "·",
                str(row["height"]),
                "✓" if row["ok"] else "✗",
            )
        console.print(table)
    _finish(passed)


@app.command()
def verify(
    ctx: typer.Context,
    suite: str = typer.Option(SUITE_ALL, "--suite", help="recursions | gf | factor | gcd | roots | algebra | all"),
    n_max: int = typer.Option(20, "--n-max", help="검사할 최대 n"),
    timing_log: bool = typer.Option(False, "--timing-log", help="스위트별 소요 시간을 JSON 로그로 저장"),
):
    """
    정확한 항등식 검증 스위트를 실행합니다. 하나라도 실패하면 종료 코드 1.
    """
    from ..graph import verify as run_verify
    from ..services.export_service import to_csv, to_json

    config = _run_config(ctx, "verify")
    try:
        state = run_verify(suite, n_max, config)
    except PascalianError as e:
        _fail("verify", e)

    results = state["results"]
    passed = all(r["passed"] for r in results)
    # 소요 시간은 실행마다 달라지므로 기계 판독용 출력에서 제외
    rows = [
        {"suite": r["suite"], "n_max": r["n_max"], "checks": r["checks"], "passed": r["passed"], "failures": len(r["failures"])}
        for r in results
    ]
    fmt = _explicit_format(ctx)
    if fmt == "csv":
        _emit(to_csv(rows, ("suite", "n_max", "checks", "passed", "failures")), config)
    elif fmt == "json":
        detail = [{**row, "failed_checks": r["failures"]} for row, r in zip(rows, results)]
        _emit(to_json(detail, config.meta()), config)
    else:
        table = Table(title=f"verify --n-max {n_max}", box=box.ROUNDED, show_header=True, header_style="bold magenta")
        table.add_column("suite", style="cyan")
        table.add_column("checks", justify="right")
        table.add_column("result", justify="center")
        table.add_column("seconds", justify="right", style="yellow")
        for r in results:
            table.add_row(r["suite"], str(r["checks"]), "✓" if r["passed"] else "✗", f"{r['duration_seconds']:.2f}")
        console.print(table)
        for r in results:
            for failure in r["failures"][:10]:
                err_console.print(f"  [red]✗[/red] {r['suite']}: {failure}", markup=True, highlight=False)

    if timing_log:
        path = save_timing_log()
        if path:
            print_success(f"Timing log saved: {path}")
    _finish(passed)


@app.command()
def roots(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="P_n 의 n (1..512)"),
):
    """
    P_n 의 모든 근을 계산하고 분류합니다 (csv / json / svg).
    """
    from ..services.export_service import ROOT_COLUMNS, root_rows, to_csv, to_json
    from ..services.root_service import RootService

    config = _run_config(ctx, "roots")
    service = RootService(config.tolerances)
    try:
        rs = service.solve_roots(n)
    except PascalianError as e:
        _fail("roots", e, n=n)

    annulus = service.annulus_check(rs)
    vieta = service.vieta_check(rs)
    rows = root_rows(rs, service.classify_all(rs))
    fmt = config.output_format
    if fmt == "csv":
        _emit(to_csv(rows, ROOT_COLUMNS), config)
    elif fmt == "json":
        payload = {"n": n, "roots": rows, "annulus": annulus.to_dict(), "vieta": vieta.to_dict()}
        _emit(to_json(payload, config.meta()), config)
    else:
        from ..services.plot_service import roots_svg

        _emit(roots_svg([rs]), config)

    err_console.print(
        f"n={n}  worst residual {rs.worst_residual:.2e}  worst Newton correction {rs.worst_correction:.2e}  "
        f"|z| in [{annulus.min_norm:.6f}, {annulus.max_norm:.6f}]  iterations {rs.iterations}",
        highlight=False,
    )
    _finish(annulus.passed and vieta.passed)


def _complex_rows(kind: str, points) -> List[Dict[str, Any]]:
    return [{"kind": kind, "index": i, "re": complex(z).real, "im": complex(z).imag} for i, z in enumerate(points)]


@app.command()
def curve(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Γ_n 의 n (>= 2)"),
    metrics: bool = typer.Option(False, "--metrics", help="극한 곡선 수렴 지표 계산 (n >= 3)"),
):
    """
    ∂Γ_n 과 ∂Γ 표본, 근사점 z_m, Γ_n 여유값과 수렴 지표를 출력합니다.
    """
    from ..services.curve_service import CurveService
    from ..services.export_service import to_csv, to_json
    from ..services.root_service import RootService

    config = _run_config(ctx, "curve")
    curve_service = CurveService(config.tolerances.boundary, config.boundary_samples)
    try:
        spec = CurveSpec.for_degree(n)
        rs = RootService(config.tolerances, curve_service).solve_roots(n)
        gamma = curve_service.no_roots_in_gamma(rs)
        report = curve_service.convergence_metrics(rs) if metrics else None
    except PascalianError as e:
        _fail("curve", e, n=n)

    boundary_n = curve_service.boundary_samples(spec)
    boundary_limit = curve_service.boundary_samples(CurveSpec.limit())
    z_m = curve_service.approximants(n).points
    summary = {"n": n, "K": spec.K, **{k: v for k, v in gamma.to_dict().items() if k != "n" and k != "K"}}
    if report is not None:
        summary["metrics"] = report.to_dict()

    fmt = config.output_format
    if fmt == "csv":
        rows = (
            _complex_rows("boundary_n", boundary_n)
            + _complex_rows("boundary_limit", boundary_limit)
            + _complex_rows("approximant", z_m)
            + _complex_rows("root", rs.roots)
        )
        # 요약 값은 kind 에 이름, value 에 값을 둔 행으로 덧붙임
        scalars = {"K": spec.K, "min_margin": summary["min_margin"], **summary.get("metrics", {})}
        rows += [{"kind": name, "value": value} for name, value in scalars.items() if name != "n"]
        _emit(to_csv(rows, ("kind", "index", "re", "im", "value")), config)
    elif fmt == "json":
        payload = {
            **summary,
            "boundary_n": [[z.real, z.imag] for z in boundary_n],
            "boundary_limit": [[z.real, z.imag] for z in boundary_limit],
            "approximants": [[z.real, z.imag] for z in z_m],
            "roots": [[z.real, z.imag] for z in rs.roots],
        }
        _emit(to_json(payload, config.meta()), config)
    else:
        from ..services.plot_service import curve_svg

        _emit(curve_svg(n, boundary_n, boundary_limit, z_m, rs), config)

    lines = [f"K = {spec.K:.15g}", f"min_margin = {gamma.min_margin:.6g}"]
    if report is not None:
        lines += [
            f"hausdorff_to_curve = {report.hausdorff_to_curve:.6g}",
            f"max_match_to_zm = {report.max_match_to_zm:.6g}",
            f"fill_gap = {report.fill_gap:.6g}",
        ]
    err_console.print(Panel.fit("\n".join(lines), title=f"Γ_{n}", border_style="cyan"), highlight=False)
    _finish(gamma.passed)


@app.command()
def conjecture(
    ctx: typer.Context,
    n_max: int = typer.Option(20, "--n-max", help="검사할 최대 짝수 n"),
    primes: str = typer.Option(",".join(str(p) for p in DEFAULT_SCAN_PRIMES), "--primes", help="쉼표로 구분한 소수 목록"),
):
    """
    짝수 n 마다 P_n 의 F_p 기약성 인증서를 찾습니다 (인증서가 없어도 실패가 아님).
    """
    from ..services.algebra_service import AlgebraService
    from ..services.export_service import to_csv, to_json

    config = _run_config(ctx, "conjecture")
    try:
        prime_list = [int(p) for p in primes.split(",") if p.strip()]
        rows = AlgebraService(config.max_workers).conjecture_scan(n_max, prime_list)
    except ValueError as e:
        _fail("conjecture", e)

    data = [row.to_dict() for row in rows]
    fmt = _explicit_format(ctx)
    if fmt == "csv":
        flat = [{**d, "primes_tried": " ".join(str(p) for p in d["primes_tried"])} for d in data]
        _emit(to_csv(flat, ("n", "certifying_prime", "primes_tried")), config)
    elif fmt == "json":
        _emit(to_json(data, config.meta()), config)
    else:
        table = Table(title="P_n irreducibility certificates (even n)", box=box.ROUNDED, header_style="bold magenta")
        table.add_column("n", justify="right", style="cyan")
        table.add_column("certifying prime", justify="center", style="green")
        table.add_column("primes tried", style="yellow")
        for row in rows:
            table.add_row(
                str(row.n),
                str(row.certifying_prime) if row.certified else "NONE",
                " ".join(str(p) for p in row.primes_tried),
            )
        console.print(table)
    certified = sum(1 for row in rows if row.certified)
    print_success(f"{certified}/{len(rows)} even n certified irreducible")


@app.command()
def config(
    ctx: typer.Context,
    show: bool = typer.Option(False, "--show", "-s", help="현재 설정 표시"),
    set_key: Optional[str] = typer.Option(None, "--set", help="설정 키 저장 (예: --set enumeration_cap=16)"),
):
    """
    설정을 관리합니다.
    """
    manager = get_default_config_manager()
    if set_key:
        key, sep, raw = set_key.partition("=")
        if not sep or not key:
            _fail("config", DomainError(f"expected KEY=VALUE, got {set_key!r}"))
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        manager.set(key.strip(), value)
        try:
            manager.build_run_config()
        except PascalianError as e:
            _fail("config", e)
        manager.save()
    if show or not set_key:
        run_config = _run_config(ctx, "config")
        console.print(Panel.fit(
            f"[bold cyan]현재 설정[/bold cyan] ({manager.config_path})\n\n"
            + json.dumps(run_config.model_dump(mode="json"), indent=2, ensure_ascii=False),
            border_style="cyan",
        ))


if __name__ == "__main__":
    app()
