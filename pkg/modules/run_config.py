"""
실행 설정 로드
- 우선순위: 기본값 < config.yaml < 환경변수 < CLI 플래그
"""

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

import yaml

from modules.errors import ConfigError


@dataclass
class RunConfig:
    config_path: str = "config.yaml"
    data_dir: str = "data"
    reports_dir: str = "reports"
    out: Optional[str] = None
    output_format: str = "json"
    workers: int = 1
    budget: Optional[float] = None
    search_ceiling: int = 7
    cut_ceiling: int = 24
    gallai_ceiling: int = 10
    verify_pruned_samples: int = 10
    pruned_node_limit: int = 200000
    progress: bool = False

    def validate(self) -> "RunConfig":
        for name in ("search_ceiling", "cut_ceiling", "gallai_ceiling", "workers"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} 는 1 이상이어야 합니다: {getattr(self, name)}")
        if self.budget is not None and self.budget < 0:
            raise ConfigError(f"budget 은 0 이상이어야 합니다: {self.budget}")
        if self.verify_pruned_samples < 0:
            raise ConfigError("verify_pruned_samples 는 0 이상이어야 합니다")
        if self.output_format not in ("json", "table"):
            raise ConfigError(f"알 수 없는 출력 형식: {self.output_format}")
        return self


# 환경변수 → (필드, 변환)
ENV_OVERRIDES = {
    "RAINBOW_SEARCH_CEILING": ("search_ceiling", int),
    "RAINBOW_CUT_CEILING": ("cut_ceiling", int),
    "RAINBOW_GALLAI_CEILING": ("gallai_ceiling", int),
    "RAINBOW_WORKERS": ("workers", int),
    "RAINBOW_BUDGET": ("budget", float),
}


def _from_yaml(cfg: dict) -> dict:
    """대문자 섹션 → RunConfig 필드"""
    search = cfg.get("SEARCH", {}) or {}
    extract = cfg.get("EXTRACT", {}) or {}
    gallai = cfg.get("GALLAI", {}) or {}
    output = cfg.get("OUTPUT", {}) or {}
    ledger = cfg.get("LEDGER", {}) or {}

    values = {
        "search_ceiling": search.get("ceiling"),
        "workers": search.get("workers"),
        "budget": search.get("budget"),
        "verify_pruned_samples": search.get("verify_pruned_samples"),
        "pruned_node_limit": search.get("pruned_node_limit"),
        "cut_ceiling": extract.get("cut_ceiling"),
        "gallai_ceiling": gallai.get("ceiling"),
        "output_format": output.get("format"),
        "progress": output.get("progress"),
        "data_dir": ledger.get("data_dir"),
        "reports_dir": ledger.get("reports_dir"),
    }
    return {key: value for key, value in values.items() if value is not None}


def load_run_config(config_path: str = "config.yaml", overrides: Optional[dict] = None,
                    environ: Optional[dict] = None) -> RunConfig:
    """설정 파일이 없으면 기본값으로 진행"""
    config = RunConfig(config_path=config_path)

    # 1. YAML
    path = Path(config_path)
    if path.exists():
        try:
            with open(path, encoding="UTF-8") as f:
                cfg = yaml.load(f, Loader=yaml.FullLoader) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"설정 파일 파싱 실패: {e}") from None
        if not isinstance(cfg, dict):
            raise ConfigError("설정 파일 최상위는 매핑이어야 합니다")
        config = replace(config, **_from_yaml(cfg))

    # 2. 환경변수
    environ = os.environ if environ is None else environ
    for var, (name, cast) in ENV_OVERRIDES.items():
        raw = environ.get(var)
        if raw is None or raw == "":
            continue
        try:
            config = replace(config, **{name: cast(raw)})
        except ValueError:
            raise ConfigError(f"환경변수 {var}={raw!r} 를 해석할 수 없습니다") from None

    # 3. CLI 플래그
    known = {f.name for f in fields(RunConfig)}
    if overrides:
        config = replace(config, **{k: v for k, v in overrides.items() if k in known and v is not None})

    return config.validate()


# 테스트 코드
if __name__ == "__main__":
    print("⚙️ ", load_run_config())
