from hierarchy_forge.verification import CheckResult, VerificationLog


def _results(*outcomes):
    return [
        CheckResult.from_outcome("suite", f"check {i}", holds=holds, asserted=asserted)
        for i, (holds, asserted) in enumerate(outcomes)
    ]


def test_items_keep_run_order_and_status_counts():
    # Arrange
    log = VerificationLog()

    # Act
    first = log.record(origin="A", description="first", results=_results((True, True), (False, False)))
    log.record(origin="B", description="second", results=_results((False, True)))

    # Assert
    assert [item.description for item in log.get_items()] == ["first", "second"]
    assert first.counts == {"pass": 1, "reported": 1}
    assert first.checks == 2


def test_totals_add_up_every_step():
    # Arrange
    log = VerificationLog()
    log.record(origin="A", description="a", results=_results((True, True), (True, False)))
    log.record(origin="B", description="b", results=_results((False, True), (True, True)))

    # Act
    totals = log.totals()

    # Assert
    assert totals == {"fail": 1, "pass": 3}
    assert list(totals) == ["fail", "pass"]


def test_step_without_checks_is_recorded_empty():
    # Arrange
    log = VerificationLog()

    # Act
    item = log.record(origin="A", description="nothing", results=[])

    # Assert
    assert item.checks == 0
    assert log.totals() == {}
