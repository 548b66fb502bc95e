"""
Plot Service
근 분포와 경계 곡선을 자체 완결형 SVG (800x800) 로 그립니다.
"""
import io
from typing import Iterable, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from ..core.constants import ANNULUS_INNER, ANNULUS_OUTER, SVG_DPI, SVG_SIZE_INCHES  # noqa: E402
from ..models.roots import RootSet  # noqa: E402

_SVG_RC = {"svg.hashsalt": "pascalian", "svg.fonttype": "none"}


def _reference_axes(title: str):
    fig, ax = plt.subplots(figsize=(SVG_SIZE_INCHES, SVG_SIZE_INCHES), dpi=SVG_DPI)
    t = np.linspace(0.0, 2.0 * np.pi, 721)
    ax.plot(ANNULUS_OUTER * np.cos(t), ANNULUS_OUTER * np.sin(t), color="0.6", lw=0.8, label="|z| = 1")
    ax.plot(
        ANNULUS_INNER * np.cos(t),
        ANNULUS_INNER * np.sin(t),
        color="0.6",
        lw=0.8,
        ls="--",
        label="|z| = √2 - 1",
    )
    ax.set_aspect("equal")
    ax.set_xlim(-1.15, 1.15)
    ax.set_ylim(-1.15, 1.15)
    ax.axhline(0.0, color="0.85", lw=0.5)
    ax.axvline(0.0, color="0.85", lw=0.5)
    ax.set_title(title)
    return fig, ax


def _to_svg(fig) -> str:
    buffer = io.StringIO()
    with plt.rc_context(_SVG_RC):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def roots_svg(root_sets: Sequence[RootSet]) -> str:
    """하나 이상의 근 집합을 환형 영역 √2-1 < |z| < 1 과 함께 그립니다 (n 순서대로 색상)"""
    title = "roots of P_n" if len(root_sets) != 1 else f"roots of P_{root_sets[0].n}"
    fig, ax = _reference_axes(title)
    cmap = plt.get_cmap("viridis")
    count = max(len(root_sets) - 1, 1)
    for i, rs in enumerate(root_sets):
        z = np.asarray(rs.roots, dtype=complex)
        ax.scatter(z.real, z.imag, s=8, color=cmap(i / count), label=None if len(root_sets) > 1 else f"n = {rs.n}")
    ax.legend(loc="upper right", fontsize="small")
    return _to_svg(fig)


def curve_svg(
    n: int,
    boundary_n: np.ndarray,
    boundary_limit: np.ndarray,
    approximant_points: Iterable[complex],
    roots: Optional[RootSet] = None,
) -> str:
    """∂Γ_n, ∂Γ, 근사점 z_m 과 (있으면) P_n 의 근"""
    fig, ax = _reference_axes(f"∂Γ_{n} and ∂Γ")
    closed_n = np.append(boundary_n, boundary_n[:1])
    closed_limit = np.append(boundary_limit, boundary_limit[:1])
    ax.plot(closed_n.real, closed_n.imag, color="tab:blue", lw=1.0, label=f"∂Γ_{n}")
    ax.plot(closed_limit.real, closed_limit.imag, color="tab:orange", lw=1.0, label="∂Γ")
    z_m = np.asarray(list(approximant_points), dtype=complex)
    ax.scatter(z_m.real, z_m.imag, s=10, marker="x", color="tab:green", label="z_m")
    if roots is not None:
        z = np.asarray(roots.roots, dtype=complex)
        ax.scatter(z.real, z.imag, s=8, color="tab:red", label=f"roots of P_{n}")
    ax.legend(loc="upper right", fontsize="small")
    return _to_svg(fig)
