import hashlib
import json
from typing import Any


def provenance_hash(payload: Any, length: int = 12) -> str:
    """
    生成稳定的短摘要

    Args:
        payload: 可 JSON 序列化的对象
        length: 摘要长度

    Returns:
        十六进制摘要前缀
    """
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:length]


__all__ = ["provenance_hash"]
