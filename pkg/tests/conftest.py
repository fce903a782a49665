import pytest

from partition_expansion import PrecisionContext

# Reference comparison table: n -> (p(n), nearest integer of the
# N=17 simplified expansion, printed ratio)
TABLE1 = {
    10: (42, 42, "1"),
    11: (56, 57, "1.0178571428571428571"),
    50: (204226, 204211, "0.9999265519571455152"),
    51: (239943, 239959, "1.0000666825037613100"),
    100: (190569292, 190568945, "0.9999981791400054107"),
    101: (214481126, 214481499, "1.0000017390807618196"),
    200: (3972999029388, 3972998993186, "0.9999999908879917331"),
    201: (4328363658647, 4328363696288, "1.0000000086963580162"),
    500: (2300165032574323995027, 2300165032573762997377, "0.9999999999997561054"),
    600: (458004788008144308553622, 458004788008137064138753, "0.9999999999999841826"),
    700: (60378285202834474611028659, 60378285202834397465935949,
          "0.9999999999999987223"),
    800: (5733052172321422504456911979, 5733052172321421800242439308,
          "0.9999999999999998772"),
    900: (415873681190459054784114365430, 415873681190459049122378030945,
          "0.9999999999999999863"),
    1000: (24061467864032622473692149727991, 24061467864032622432794750374387,
           "0.9999999999999999983"),
}


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(decimal_digits=40)


@pytest.fixture(scope="session")
def ctx60():
    return PrecisionContext(decimal_digits=60)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion, then assert."""
    def record(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
