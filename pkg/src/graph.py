"""
LangGraph StateGraph assembly for the Pascalian verification suites
"""
from typing import Callable, Dict, List

from langgraph.graph import StateGraph, END

from .core.constants import SUITE_ALL, SUITE_NAMES
from .core.errors import DomainError
from .models.run_config import RunConfig
from .nodes import algebra_node, factor_node, gcd_node, gf_node, recursions_node, roots_node
from .state import VerificationState, create_state
from .utils import print_warning

Node = Callable[[VerificationState], VerificationState]

SUITE_NODES: Dict[str, Node] = {
    "recursions": recursions_node,
    "gf": gf_node,
    "factor": factor_node,
    "gcd": gcd_node,
    "roots": roots_node,
    "algebra": algebra_node,
}


def resolve_suites(suite: str) -> List[str]:
    """
    스위트 이름을 실행 목록으로 변환합니다 ("all" 은 전체).

    Raises:
        DomainError: 알 수 없는 스위트 이름
    """
    if suite == SUITE_ALL:
        return list(SUITE_NAMES)
    if suite not in SUITE_NODES:
        raise DomainError(f"unknown suite '{suite}' (choose from {', '.join(SUITE_NAMES + (SUITE_ALL,))})")
    return [suite]


def summary_node(state: VerificationState) -> VerificationState:
    """마지막 노드: 실패한 스위트 목록을 stderr 로 알립니다"""
    failed = [r["suite"] for r in state["results"] if not r["passed"]]
    if failed:
        print_warning(f"failed suites: {', '.join(failed)}", context="verify")
    return state


def create_verification_graph(suites: List[str]):
    """
    선택된 스위트를 SUITE_NAMES 순서로 잇는 StateGraph 생성

    Args:
        suites: 실행할 스위트 이름

    Returns:
        컴파일된 StateGraph
    """
    ordered = [s for s in SUITE_NAMES if s in suites]
    workflow = StateGraph(VerificationState)

    for suite in ordered:
        workflow.add_node(suite, SUITE_NODES[suite])
    workflow.add_node("summary", summary_node)

    # 스위트 노드를 차례로 연결하고 summary 에서 끝냄
    workflow.set_entry_point(ordered[0] if ordered else "summary")
    for current, following in zip(ordered, ordered[1:] + ["summary"]):
        workflow.add_edge(current, following)
    workflow.add_edge("summary", END)

    return workflow.compile()


def run_verification(state: VerificationState) -> VerificationState:
    app = create_verification_graph(state["suites"])
    return app.invoke(state)


def verify(suite: str, n_max: int, config: RunConfig) -> VerificationState:
    if n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {n_max}")
    return run_verification(create_state(resolve_suites(suite), n_max, config))
