from enum import Enum

class Result(Enum):
    RAN = 0
    CONFIG_ERROR = 1
    STATISTICAL_FLAG = 2

    @property
    def exit_code(self) -> int:
        return self.value
