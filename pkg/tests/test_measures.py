import pytest
from hypothesis import given, settings, strategies as st

from scaledim import (
    ScaleMeasure,
    canonical_view,
    is_full_scale_measure,
    is_scale_measure,
    is_view,
    make_view,
)
from scaledim.context import all_extents, meet_irreducible_extents
from scaledim.errors import PreconditionError, SpecError, StructureError

from . import oracles
from .conftest import contexts, make_context, random_context


def brute_is_measure(source, target, mapping):
    src = oracles.extents(source)
    for e in oracles.extents(target):
        pre = frozenset(g for g, t in zip(source.objects, mapping) if target.objects[t] in e)
        if pre not in src:
            return False
    return True


def test_identity_on_drive(drive):
    assert is_scale_measure(ScaleMeasure.identity(drive, drive)).ok


def test_drive_to_diag3_matches_brute_force(drive, diag3):
    maps = [(0, 0, 1, 1, 2), (0, 1, 0, 2, 2), (0, 1, 2, 1, 2), (2, 1, 0, 0, 0)]
    seen = set()
    for mp in maps:
        check = is_scale_measure(ScaleMeasure(drive, diag3, mp))
        assert check.ok == brute_is_measure(drive, diag3, mp)
        seen.add(check.ok)
        if not check.ok:
            pre = ScaleMeasure(drive, diag3, mp).pull_back(check.counterexample)
            assert frozenset(drive.object_names(pre)) not in oracles.extents(drive)
    assert seen == {True, False}


def test_counterexample_is_lectically_first(drive, diag3):
    sm = ScaleMeasure(drive, diag3, (0, 1, 0, 2, 2))
    check = is_scale_measure(sm)
    bad = [e for e in all_extents(diag3).extents
           if frozenset(drive.object_names(sm.pull_back(e))) not in oracles.extents(drive)]
    assert not check.ok and check.counterexample == bad[0]


def test_measure_construction_errors(drive, diag3):
    with pytest.raises(StructureError):
        ScaleMeasure(drive, diag3, (0, 1))
    with pytest.raises(StructureError):
        ScaleMeasure(drive, diag3, (0, 1, 2, 3, 0))
    with pytest.raises(StructureError):
        ScaleMeasure.from_names(drive, diag3, {"Conventional": "g1"})
    with pytest.raises(StructureError):
        ScaleMeasure.identity(drive, diag3)


def test_full_measure(drive):
    lat = all_extents(drive)
    full_view = canonical_view(drive, lat.extents)
    assert is_full_scale_measure(ScaleMeasure.identity(drive, full_view))
    mi = meet_irreducible_extents(lat)
    partial = canonical_view(drive, mi[1:])
    assert not is_full_scale_measure(ScaleMeasure.identity(drive, partial))


def test_single_scale_of_two_is_not_full(fig2):
    from scaledim.scaling import plain_scaling, scale_measure_map, scales_for
    from scaledim.dimensions import interordinal_scaling_dimension, reconstruct_interordinal_mv
    from scaledim.formats import parse_cxt
    from .conftest import data_bytes
    drive = parse_cxt(data_bytes("drive.cxt"))
    lat = all_extents(drive)
    rec = reconstruct_interordinal_mv(lat, interordinal_scaling_dimension(lat).cover)
    derived = plain_scaling(rec.mv, rec.scales)
    m = rec.mv.attributes[0]
    sm = ScaleMeasure(derived, rec.scales[m].context, scale_measure_map(rec.mv, m, rec.scales[m]))
    assert is_scale_measure(sm).ok
    assert not is_full_scale_measure(sm)


def test_full_requires_measure(drive, diag3):
    with pytest.raises(PreconditionError):
        is_full_scale_measure(ScaleMeasure(drive, diag3, (0, 1, 0, 2, 2)))


def test_make_view_examples(drive):
    view = make_view(drive, {"n": ["1", "2"]})
    assert view.object_names(view.column_masks[0]) == ("Mid-Wheel", "Rear-Wheel", "Front-Wheel")
    assert make_view(drive, {"all": []}).column_masks == (drive.all_objects,)
    iso = make_view(drive, {m: [m] for m in drive.attributes})
    assert iso == drive
    with pytest.raises(SpecError):
        make_view(drive, {"n": ["nope"]})


def test_is_view_examples(drive, diag3):
    assert is_view(drive, drive)
    assert is_view(make_view(drive, {"a": ["1", "3"], "b": ["5"]}), drive)
    bad = canonical_view(drive, [drive.all_objects]).__class__.from_columns(
        drive.objects, [("x", drive.object_mask(["Conventional", "Mid-Wheel"]))])
    assert not is_view(bad, drive)
    with pytest.raises(StructureError):
        is_view(diag3, drive)


def test_canonical_view_examples(drive):
    lat = all_extents(drive)
    cv = canonical_view(drive, drive.column_masks)
    assert set(all_extents(cv).extents) == set(lat.extents)
    assert is_view(cv, drive)
    assert canonical_view(drive, [drive.all_objects]).column_masks == (drive.all_objects,)
    with pytest.raises(SpecError):
        canonical_view(drive, [drive.object_mask(["Conventional", "Mid-Wheel"])])


@settings(max_examples=80, deadline=None)
@given(contexts(max_objects=5))
def test_canonical_view_of_meet_irreducibles(ctx):
    lat = all_extents(ctx)
    cv = canonical_view(ctx, meet_irreducible_extents(lat))
    assert set(all_extents(cv).extents) == set(lat.extents)
    assert is_full_scale_measure(ScaleMeasure.identity(ctx, canonical_view(ctx, lat.extents)))


@settings(max_examples=80, deadline=None)
@given(contexts(max_objects=5, max_attributes=5), st.data())
def test_make_view_is_view(ctx, data):
    spec = {}
    for k in range(data.draw(st.integers(0, 4))):
        spec[f"n{k}"] = data.draw(st.lists(st.sampled_from(ctx.attributes), unique=True)
                                  if ctx.attributes else st.just([]))
    assert is_view(make_view(ctx, spec), ctx)


@settings(max_examples=120, deadline=None)
@given(contexts(max_objects=4, max_attributes=4), contexts(max_objects=4, max_attributes=4),
       contexts(max_objects=4, max_attributes=4), st.data())
def test_measures_compose(k, s, t, data):
    if not s.objects or not t.objects:
        return
    sigma = tuple(data.draw(st.integers(0, s.n_objects - 1)) for _ in k.objects)
    tau = tuple(data.draw(st.integers(0, t.n_objects - 1)) for _ in s.objects)
    first = is_scale_measure(ScaleMeasure(k, s, sigma)).ok
    second = is_scale_measure(ScaleMeasure(s, t, tau)).ok
    assert first == brute_is_measure(k, s, sigma)
    if first and second:
        assert is_scale_measure(ScaleMeasure(k, t, tuple(tau[i] for i in sigma))).ok


def test_random_measures_match_brute_force(rng):
    for _ in range(150):
        src = random_context(rng, 4, 4)
        tgt = random_context(rng, 4, 4)
        if not tgt.objects:
            continue
        mp = tuple(rng.randrange(tgt.n_objects) for _ in src.objects)
        assert is_scale_measure(ScaleMeasure(src, tgt, mp)).ok == brute_is_measure(src, tgt, mp)
