"""
무지개 삼각형 툴킷 예외 정의
- 입력/전제조건 오류는 ValueError 계열 (CLI 종료코드 2)
- 내부 자기검증 실패는 RuntimeError 계열 (조용히 넘어가면 안 됨)
"""


class RainbowError(ValueError):
    """툴킷 공통 입력 오류"""


class GraphFormatError(RainbowError):
    """그래프 파일 형식 오류 (줄 번호 포함)"""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f"{line_no}번째 줄: {message}"
        super().__init__(message)


class PreconditionError(RainbowError):
    """연산 전제조건 위반"""


class RainbowTriangleError(PreconditionError):
    """무지개 삼각형이 있어서 진행 불가 (인증서 포함)"""

    def __init__(self, message, certificate):
        self.certificate = certificate
        super().__init__(message)


class ConfigError(RainbowError):
    """설정값 오류"""


class InternalConsistencyError(RuntimeError):
    """공식/보조정리 자기검증 실패"""
