import csv
import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from modules.coloured_graph import ColouredGraph, write_graph

REQUIRED_FIELDS = ("n", "k", "g", "status")


class LedgerManager:
    """g(n,k) 결과 원장 / 증인 그래프 / 체크포인트 관리 클래스"""

    def __init__(self, data_dir='data', reports_dir='reports'):
        self.data_dir = Path(data_dir)
        self.reports_dir = Path(reports_dir)

        # 디렉토리 생성
        self.witness_dir = self.data_dir / 'witnesses'
        self.checkpoint_dir = self.data_dir / 'checkpoints'
        for directory in (self.data_dir, self.reports_dir, self.witness_dir, self.checkpoint_dir):
            directory.mkdir(parents=True, exist_ok=True)

        # 파일 경로
        self.results_file = self.data_dir / 'results.jsonl'

    def add_result(self, row: Dict) -> Dict:
        """결과 한 줄 추가 (timestamp 자동)

        Args:
            row (dict): {
                'n', 'k', 'g', 'status', 'witness_file',
                'enumerated', 'seconds', 'best_h', 'verdict'
            }
        """
        record = dict(row)
        record['timestamp'] = datetime.now().strftime('%Y-%m-%d %H:%M:%S')

        with open(self.results_file, 'a', encoding='utf-8') as f:
            f.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + '\n')

        print(f"✅ 결과 저장: g({record['n']},{record['k']}) = {record['g']} [{record['status']}]",
              file=sys.stderr)
        return record

    def save_witness(self, n: int, k: int, graph: ColouredGraph) -> str:
        """증인 그래프를 교환 형식으로 저장하고 원장 기준 상대 경로 반환"""
        path = self.witness_dir / f'g_{n}_{k}.txt'
        path.write_text(write_graph(graph), encoding='utf-8')
        return str(path.relative_to(self.data_dir))

    def get_results(self) -> List[Dict]:
        """원장 전체 (깨진 줄은 경고 후 건너뜀)"""
        if not self.results_file.exists():
            return []

        rows = []
        with open(self.results_file, encoding='utf-8') as f:
            for line_no, line in enumerate(f, 1):
                if not line.strip():
                    continue
                try:
                    row = json.loads(line)
                except json.JSONDecodeError:
                    print(f"⚠️  원장 {line_no}번째 줄 손상 (JSON 아님), 건너뜀", file=sys.stderr)
                    continue
                if not isinstance(row, dict) or any(key not in row for key in REQUIRED_FIELDS):
                    print(f"⚠️  원장 {line_no}번째 줄 필드 누락, 건너뜀", file=sys.stderr)
                    continue
                rows.append(row)
        return rows

    def latest_results(self) -> Dict[Tuple[int, int], Dict]:
        """(n, k) 별 마지막 결과"""
        latest = {}
        for row in self.get_results():
            latest[(row['n'], row['k'])] = row
        return latest

    # ------------------------------------------------------------------
    # 체크포인트
    # ------------------------------------------------------------------

    def _checkpoint_file(self, n: int, k: int) -> Path:
        return self.checkpoint_dir / f'g_{n}_{k}.json'

    def load_checkpoint(self, n: int, k: int) -> Optional[Dict]:
        path = self._checkpoint_file(n, k)
        if not path.exists():
            return None
        try:
            state = json.loads(path.read_text(encoding='utf-8'))
        except json.JSONDecodeError:
            print(f"⚠️  체크포인트 손상: {path}, 처음부터 탐색", file=sys.stderr)
            return None
        print(f"📂 체크포인트 재개: m={state['level_m']}, index={state['index']}", file=sys.stderr)
        return state

    def save_checkpoint(self, n: int, k: int, state: Dict):
        path = self._checkpoint_file(n, k)
        path.write_text(json.dumps(state, sort_keys=True), encoding='utf-8')
        print(f"💾 체크포인트 저장: {path}", file=sys.stderr)

    def clear_checkpoint(self, n: int, k: int):
        path = self._checkpoint_file(n, k)
        if path.exists():
            path.unlink()

    # ------------------------------------------------------------------
    # 리포트
    # ------------------------------------------------------------------

    def export_report(self, rows: Optional[List[Dict]] = None) -> Path:
        """원장 요약 CSV 저장"""
        rows = self.get_results() if rows is None else rows
        filename = f"g_report_{datetime.now().strftime('%Y%m%d_%H%M%S')}.csv"
        filepath = self.reports_dir / filename

        columns = ['n', 'k', 'g', 'status', 'best_h', 'verdict', 'enumerated', 'seconds', 'timestamp']
        with open(filepath, 'w', newline='', encoding='utf-8-sig') as f:
            writer = csv.writer(f)
            writer.writerow(columns)
            for row in rows:
                writer.writerow([row.get(col, '') for col in columns])

        print(f"📄 리포트 생성: {filepath}", file=sys.stderr)
        return filepath


# 테스트 코드
if __name__ == "__main__":
    ledger = LedgerManager()
    print(f"📊 원장 {len(ledger.get_results())}줄")
