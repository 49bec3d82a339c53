#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
무지개 삼각형 툴킷
- 극값 구성 생성 (H 가족, 사이클 거듭제곱, z 정점, 바퀴 예제)
- 무지개 삼각형/사이클 탐지와 인증서
- 삼각형 부등식 검사, Gallai 분할
- g(n,k) 정확 계산 + 결과 원장
- 벗겨내기 / 최대 절단 / 재구성 파이프라인
"""

import argparse
import json
import sys
import traceback
from datetime import datetime
from fractions import Fraction

import pandas as pd

from modules.bounds import (
    bound_suite, chapprox_forces_rainbow, check_majority_bound,
    claim_neighbourhood_bound, goodman_lower_bound, ls_stability_bound,
)
from modules.colouring_oracle import colourable_rainbow_free
from modules.coloured_graph import (
    graph_to_json, parse_graph, read_digraph, underlying, write_graph,
)
from modules.constructions import (
    CyclePower, HFamily, WheelExample, ZVertex, build, merge_to_exact_k,
)
from modules.errors import PreconditionError, RainbowError, RainbowTriangleError
from modules.g_search import best_h, classify, compute_g, h_maximum
from modules.gallai_partition import find_gallai_partition, max_class_at_least_n_minus_1
from modules.ledger_manager import LedgerManager
from modules.rainbow_detector import (
    check_conjecture_instance, digraph_to_coloured, find_rainbow_cycle_upto,
    find_rainbow_triangle,
)
from modules.report_generator import ReportGenerator, render_table, report_table
from modules.run_config import load_run_config
from modules.structure_extractor import run_pipeline, thresholds

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def log(message):
    """진행 메시지는 stderr 로 (stdout 은 결과 전용)"""
    print(message, file=sys.stderr)


def _json_default(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"JSON 으로 바꿀 수 없는 값: {value!r}")


def to_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False, default=_json_default) + "\n"


class RainbowToolkit:
    """무지개 삼각형 툴킷 메인 시스템"""

    def __init__(self, config):
        self.cfg = config
        self._ledger = None

    @property
    def ledger(self) -> LedgerManager:
        if self._ledger is None:
            self._ledger = LedgerManager(self.cfg.data_dir, self.cfg.reports_dir)
        return self._ledger

    # ------------------------------------------------------------------
    # 입력
    # ------------------------------------------------------------------

    @staticmethod
    def _read_text(path):
        if path in (None, "-"):
            return sys.stdin.read()
        with open(path, encoding="utf-8") as f:
            return f.read()

    def _graph(self, args):
        return parse_graph(self._read_text(args.file))

    # ------------------------------------------------------------------
    # gen
    # ------------------------------------------------------------------

    def gen(self, args):
        specs = {
            "h": lambda: HFamily(args.a, args.b, args.k),
            "cycle-power": lambda: CyclePower(args.k, args.r),
            "z-vertex": lambda: ZVertex(args.k, args.r),
            "wheel": lambda: WheelExample(args.k),
        }
        if args.kind == "h" and args.merge:
            g = merge_to_exact_k(args.a, args.b, args.k)
        else:
            g = build(specs[args.kind]())
        log(f"✅ 생성: {args.kind} (n={g.n}, m={g.m}, 색 {g.p}개)")
        if args.json:
            return graph_to_json(g), EXIT_OK
        return write_graph(g), EXIT_OK

    # ------------------------------------------------------------------
    # detect
    # ------------------------------------------------------------------

    def detect(self, args):
        if args.kind == "reduce-digraph":
            g = digraph_to_coloured(read_digraph(self._read_text(args.file)))
            log(f"✅ 변환: n={g.n}, 색 {g.p}개")
            return write_graph(g), EXIT_OK

        g = self._graph(args)
        if args.kind == "triangle":
            cert = find_rainbow_triangle(g)
            return cert.to_dict(), EXIT_NEGATIVE if cert.found else EXIT_OK
        if args.kind == "cycle":
            cert = find_rainbow_cycle_upto(g, args.max_len)
            return cert.to_dict(), EXIT_NEGATIVE if cert.found else EXIT_OK

        verdict = check_conjecture_instance(g, args.r)
        if verdict.counterexample:
            log("❌ 가설은 성립하는데 무지개 사이클이 없습니다 (COUNTEREXAMPLE)")
        return verdict.to_dict(), EXIT_NEGATIVE if verdict.counterexample else EXIT_OK

    # ------------------------------------------------------------------
    # bound
    # ------------------------------------------------------------------

    def bound(self, args):
        if args.kind == "goodman":
            value = goodman_lower_bound(args.n, args.m)
            return {"bound": "goodman", "n": args.n, "m": args.m, "value": value}, EXIT_OK
        if args.kind == "chapprox":
            verdict = chapprox_forces_rainbow(args.n, args.classes, args.size)
            return verdict.to_dict(), EXIT_OK
        if args.kind == "ls":
            g = self._graph(args) if args.file else None
            n, m = (g.n, g.m) if g else (args.n, args.m)
            if n is None or m is None:
                raise PreconditionError("--n/--m 또는 --graph 가 필요합니다")
            report = ls_stability_bound(n, m, g)
        elif args.kind == "majority":
            report = check_majority_bound(self._graph(args), args.k)
        elif args.kind == "claim":
            W = [int(x) for x in args.W.split(",") if x.strip()] if args.W else []
            report = claim_neighbourhood_bound(self._graph(args), args.w, W, args.k)
        else:
            summary = bound_suite(args.max_n, progress=self.cfg.progress)
            return summary, EXIT_NEGATIVE if summary["violations"] else EXIT_OK
        return report.to_dict(), EXIT_NEGATIVE if report.holds is False else EXIT_OK

    # ------------------------------------------------------------------
    # gallai
    # ------------------------------------------------------------------

    def gallai(self, args):
        g = self._graph(args)
        if args.kind == "find":
            return find_gallai_partition(g, self.cfg.gallai_ceiling).to_dict(), EXIT_OK
        report = max_class_at_least_n_minus_1(g, self.cfg.gallai_ceiling)
        return report.to_dict(), EXIT_OK if report.holds else EXIT_NEGATIVE

    # ------------------------------------------------------------------
    # search
    # ------------------------------------------------------------------

    def search_g(self, n, k, seed=True):
        """g(n,k) 계산 → 원장 기록"""
        log(f"🔍 g({n},{k}) 탐색 시작 (workers={self.cfg.workers}, budget={self.cfg.budget})")
        result = compute_g(
            n, k, budget=self.cfg.budget, workers=self.cfg.workers,
            checkpoint=self.ledger, ceiling=self.cfg.search_ceiling,
            seed_constructions=seed,
            verify_pruned_samples=self.cfg.verify_pruned_samples,
            pruned_node_limit=self.cfg.pruned_node_limit,
            progress=self.cfg.progress,
        )
        h_max, best_a = h_maximum(n, k)
        verdict = classify(result.g_value, result.status, h_max)
        witness_file = self.ledger.save_witness(n, k, result.witness)
        self.ledger.add_result({
            "n": n, "k": k, "g": result.g_value, "status": result.status,
            "witness_file": witness_file, "enumerated": result.enumerated,
            "seconds": result.seconds, "best_h": h_max, "verdict": verdict,
        })
        payload = result.to_dict()
        payload.update({"best_h": h_max, "best_a": best_a, "verdict": verdict,
                        "witness_file": witness_file})
        return payload

    def search(self, args):
        if args.kind == "g":
            return self.search_g(args.n, args.k, seed=not args.no_seed), EXIT_OK
        if args.kind == "verify":
            payload = self.search_g(args.n, args.k)
            keys = ("n", "k", "g", "status", "best_h", "best_a", "verdict")
            return {key: payload[key] for key in keys}, EXIT_OK
        if args.kind == "best-h":
            return best_h(args.n, args.k).to_dict(), EXIT_OK
        if args.kind == "colourable":
            outcome = colourable_rainbow_free(underlying(self._graph(args)), args.k)
            return outcome.to_dict(), EXIT_OK if outcome.feasible else EXIT_NEGATIVE
        return self.report(args)

    def report(self, args):
        generator = ReportGenerator(self.ledger)
        if self.cfg.output_format == "table":
            return render_table(report_table(self.ledger.get_results())), EXIT_OK
        if getattr(args, "export", False):
            generator.export()
        return generator.to_payload(), EXIT_OK

    # ------------------------------------------------------------------
    # extract
    # ------------------------------------------------------------------

    def extract(self, args):
        if args.kind == "thresholds":
            n1, n2 = thresholds(args.k)
            return {"k": args.k, "n1": n1, "n2": n2}, EXIT_OK
        report = run_pipeline(self._graph(args), args.k, args.cut, self.cfg.cut_ceiling)
        return report.to_dict(), EXIT_OK

    # ------------------------------------------------------------------
    # 출력
    # ------------------------------------------------------------------

    def emit(self, payload):
        if isinstance(payload, str):
            text = payload
        elif self.cfg.output_format == "table":
            flat = pd.json_normalize(json.loads(to_json(payload)), sep=".")
            text = flat.T.to_string(header=False) + "\n"
        else:
            payload = dict(payload)
            payload["timestamp"] = datetime.now().isoformat(timespec="seconds")
            text = to_json(payload)

        if self.cfg.out:
            with open(self.cfg.out, "w", encoding="utf-8") as f:
                f.write(text)
            log(f"📄 결과 저장: {self.cfg.out}")
        else:
            sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", dest="config_path", default=argparse.SUPPRESS)
    common.add_argument("--data-dir", dest="data_dir", default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", type=float, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    common.add_argument("--format", dest="output_format", choices=["json", "table"],
                        default=argparse.SUPPRESS)
    common.add_argument("--progress", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="main.py", description="무지개 삼각형 툴킷",
                                     parents=[common])
    commands = parser.add_subparsers(dest="command", required=True)

    def leaf(group, name, help_text):
        return group.add_parser(name, help=help_text, parents=[common])

    def file_arg(p):
        p.add_argument("file", nargs="?", default="-", help="그래프 파일 ('-' 는 stdin)")

    # gen
    gen = commands.add_parser("gen", help="구성 생성").add_subparsers(dest="kind", required=True)
    p = leaf(gen, "h", "H^k_{a,b}")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--merge", action="store_true", help="색 크기를 정확히 k 로 합침 (2k | b)")
    p.add_argument("--json", action="store_true")
    for name in ("cycle-power", "z-vertex"):
        p = leaf(gen, name, name)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--json", action="store_true")
    p = leaf(gen, "wheel", "바퀴 예제")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")

    # detect
    detect = commands.add_parser("detect", help="무지개 탐지").add_subparsers(dest="kind", required=True)
    file_arg(leaf(detect, "triangle", "무지개 삼각형"))
    p = leaf(detect, "cycle", "길이 r 이하 무지개 사이클")
    p.add_argument("--max-len", dest="max_len", type=int, required=True)
    file_arg(p)
    file_arg(leaf(detect, "reduce-digraph", "방향 그래프 → 색칠 그래프"))
    p = leaf(detect, "conjecture", "색 수/크기 가설 확인")
    p.add_argument("--r", type=int, required=True)
    file_arg(p)

    # bound
    bound = commands.add_parser("bound", help="부등식 검사").add_subparsers(dest="kind", required=True)
    p = leaf(bound, "goodman", "Goodman 하한")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p = leaf(bound, "majority", "다수색 상한")
    p.add_argument("--k", type=int, required=True)
    file_arg(p)
    p = leaf(bound, "ls", "안정성 하한")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--graph", dest="file", default=None)
    p = leaf(bound, "chapprox", "무지개 삼각형 강제 조건")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classes", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p = leaf(bound, "claim", "이웃 집합 간선 상한")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--W", default="")
    p.add_argument("--k", type=int, required=True)
    file_arg(p)
    p = leaf(bound, "suite", "작은 n 전수 검사")
    p.add_argument("--max-n", dest="max_n", type=int, default=7)

    # gallai
    gallai = commands.add_parser("gallai", help="Gallai 분할").add_subparsers(dest="kind", required=True)
    file_arg(leaf(gallai, "find", "분할 찾기"))
    file_arg(leaf(gallai, "check-lemma", "최대 색 크기 ≥ n-1"))

    # search
    search = commands.add_parser("search", help="g(n,k) 탐색").add_subparsers(dest="kind", required=True)
    p = leaf(search, "g", "g(n,k) 계산")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--no-seed", dest="no_seed", action="store_true",
                   help="구성 하한으로 조기 종료하지 않음")
    for name, help_text in (("best-h", "H 가족 최적"), ("verify", "탐색값 vs H 가족")):
        p = leaf(search, name, help_text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
    p = leaf(search, "colourable", "색칠 가능성")
    p.add_argument("--k", type=int, required=True)
    file_arg(p)
    p = leaf(search, "report", "결과 원장 표")
    p.add_argument("--export", action="store_true")

    # extract
    extract = commands.add_parser("extract", help="구조 추출").add_subparsers(dest="kind", required=True)
    p = leaf(extract, "pipeline", "벗겨내기 → 최대 절단 → 재구성")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cut", choices=["exact", "unfriendly"], default="exact")
    file_arg(p)
    p = leaf(extract, "thresholds", "n1(k), n2(k)")
    p.add_argument("--k", type=int, required=True)

    # report
    p = commands.add_parser("report", help="결과 원장 표", parents=[common])
    p.add_argument("--export", action="store_true")

    return parser


def run(argv=None) -> int:
    """CLI 실행, 종료 코드 반환 (0 성공, 1 부정 판정, 2 사용/입력 오류)"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    overrides = {
        name: getattr(args, name, None)
        for name in ("data_dir", "workers", "budget", "out", "output_format", "progress")
    }
    try:
        toolkit = RainbowToolkit(load_run_config(getattr(args, "config_path", "config.yaml"), overrides))
        payload, code = getattr(toolkit, args.command)(args)
        toolkit.emit(payload)
    except RainbowTriangleError as e:
        log(f"❌ {e}")
        sys.stdout.write(to_json({"error": str(e), "kind": type(e).__name__,
                                  "certificate": e.certificate.to_dict()}))
        return EXIT_USAGE
    except (RainbowError, OSError) as e:
        log(f"❌ {e}")
        sys.stdout.write(to_json({"error": str(e), "kind": type(e).__name__}))
        return EXIT_USAGE
    return code


def main():
    try:
        sys.exit(run(sys.argv[1:]))
    except Exception as e:
        log(f"\n❌ 내부 오류: {e}")
        traceback.print_exc()
        sys.exit(3)


if __name__ == "__main__":
    main()
