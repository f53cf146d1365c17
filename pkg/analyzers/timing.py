import math

from config import HIGH_TIME_LIMIT, LOW_TIME_LIMIT
from errors import NegativeTimeError
from models import TimeCategory


def categorize_time(seconds: float) -> TimeCategory:
    """Low below 30 s, High above 60 s, Medium in between (bounds inclusive)."""
    seconds = float(seconds)
    if math.isnan(seconds) or seconds < 0:
        raise NegativeTimeError(f"execution time must be >= 0, got {seconds}")
    if seconds < LOW_TIME_LIMIT:
        return TimeCategory.LOW
    if seconds > HIGH_TIME_LIMIT:
        return TimeCategory.HIGH
    return TimeCategory.MEDIUM
