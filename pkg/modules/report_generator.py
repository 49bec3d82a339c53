import sys
from typing import Dict, List, Optional

import pandas as pd

from modules.errors import InternalConsistencyError, PreconditionError
from modules.g_search import classify, h_maximum

COLUMNS = ['n', 'k', 'g', 'status', 'best_h', 'verdict']


def _clean_row(row: Dict) -> Optional[Dict]:
    """표에 쓸 수 있는 행으로 정리 (불가능하면 None)"""
    try:
        n, k, g = int(row['n']), int(row['k']), int(row['g'])
        status = str(row['status'])
        best = row.get('best_h')
        best = h_maximum(n, k)[0] if best is None else int(best)
        verdict = row.get('verdict') or classify(g, status, best)
    except (KeyError, TypeError, ValueError, PreconditionError, InternalConsistencyError):
        return None
    return {'n': n, 'k': k, 'g': g, 'status': status, 'best_h': best, 'verdict': verdict}


def report_table(rows: List[Dict]) -> pd.DataFrame:
    """(n, k) 별 마지막 결과 표

    H 가족 비교 열(best_h, verdict)이 없으면 계산해서 채운다.
    """
    cleaned = []
    for i, row in enumerate(rows, 1):
        entry = _clean_row(row) if isinstance(row, dict) else None
        if entry is None:
            print(f"⚠️  {i}번째 원장 행이 손상되어 건너뜀: {row!r}", file=sys.stderr)
            continue
        cleaned.append(entry)

    if not cleaned:
        return pd.DataFrame(columns=COLUMNS)

    df = pd.DataFrame(cleaned, columns=COLUMNS)
    df = df.drop_duplicates(subset=['n', 'k'], keep='last')
    return df.sort_values(['n', 'k']).reset_index(drop=True)


def g_grid(df: pd.DataFrame) -> pd.DataFrame:
    """행 n, 열 k 의 g 값 격자 (lower_bound_only 는 '*' 표시)"""
    if df.empty:
        return pd.DataFrame()
    marked = df.assign(
        cell=[f"{g}*" if status != 'exact' else str(g) for g, status in zip(df['g'], df['status'])])
    return marked.pivot(index='n', columns='k', values='cell').fillna('-')


def render_table(df: pd.DataFrame) -> str:
    """사람이 읽는 표 (원장 + 격자)"""
    if df.empty:
        return "(빈 원장)\n"
    lines = [
        "=" * 70,
        "📊 g(n,k) 결과",
        "=" * 70,
        df.to_string(index=False),
        "",
        "격자 (* = lower_bound_only)",
        g_grid(df).to_string(),
    ]
    return "\n".join(lines) + "\n"


class ReportGenerator:
    """결과 원장 리포트 생성기"""

    def __init__(self, ledger):
        self.ledger = ledger

    def build(self) -> pd.DataFrame:
        return report_table(self.ledger.get_results())

    def to_payload(self) -> Dict:
        df = self.build()
        grid = g_grid(df)
        return {
            'rows': df.to_dict(orient='records'),
            'grid': {str(n): {str(k): cell for k, cell in row.items()}
                     for n, row in grid.to_dict(orient='index').items()},
        }

    def export(self):
        """CSV 로 내보내기"""
        df = self.build()
        return self.ledger.export_report(df.to_dict(orient='records'))


# 테스트 코드
if __name__ == "__main__":
    demo = [
        {'n': 5, 'k': 2, 'g': 8, 'status': 'exact', 'best_h': 7},
        {'n': 6, 'k': 2, 'g': 10, 'status': 'exact', 'best_h': 10},
    ]
    print(render_table(report_table(demo)))
