from hypothesis import given, settings

import pytest

from scaledim.context import (
    FormalContext,
    all_extents,
    clarify,
    closure,
    complement_is_extent,
    extent,
    intent,
    is_atomistic,
    is_extent,
    is_subset,
    iter_extents,
    lectic_key,
    meet_irreducible_extents,
    prime,
)
from scaledim.errors import CapacityError, StructureError

from . import oracles
from .conftest import contexts, make_context


def names(ctx, masks):
    return {frozenset(ctx.object_names(m)) for m in masks}


def test_prime_front_wheel(drive):
    fw = drive.object_mask(["Front-Wheel"])
    assert drive.attribute_names(prime(drive, fw)) == ("1", "2", "3", "4", "5")


def test_prime_of_empty_object_set_is_all_attributes(drive):
    assert prime(drive, 0) == drive.all_attributes
    assert prime(drive, 0, side="attributes") == drive.all_objects


def test_prime_nominal(nominal2):
    assert prime(nominal2, nominal2.object_mask(["a", "b"])) == 0


def test_prime_rejects_out_of_range(nominal2):
    with pytest.raises(StructureError):
        prime(nominal2, 0b100)
    with pytest.raises(ValueError):
        prime(nominal2, 0, side="both")


def test_closure_examples(drive, diag3):
    c = drive.object_mask(["Conventional"])
    assert closure(drive, c) == c
    assert closure(drive, drive.all_objects) == drive.all_objects
    assert closure(diag3, diag3.object_mask(["g1", "g2"])) == diag3.all_objects


def test_drive_has_24_extents(drive):
    lat = all_extents(drive)
    assert len(lat) == 24
    assert drive.n_incidences == 21


def test_empty_context_has_one_extent():
    lat = all_extents(FormalContext((), (), ()))
    assert lat.extents == (0,)
    assert lat.upper_covers == ((),)


def test_nominal_extents(nominal2):
    lat = all_extents(nominal2)
    assert names(nominal2, lat.extents) == {frozenset(), frozenset("a"), frozenset("b"),
                                            frozenset("ab")}


def test_extents_are_in_lectic_order(drive):
    lat = all_extents(drive)
    keys = [lectic_key(e, drive.n_objects) for e in lat.extents]
    assert keys == sorted(keys)
    assert lat.extents[-1] == drive.all_objects


def test_capacity_error(drive):
    with pytest.raises(CapacityError) as err:
        all_extents(drive, max_extents=10)
    assert err.value.count == 10


def test_meet_irreducibles_of_drive_are_attribute_extents(drive):
    lat = all_extents(drive)
    assert set(meet_irreducible_extents(lat)) == set(drive.column_masks)


def test_meet_irreducibles_staircase(staircase):
    lat = all_extents(staircase)
    assert names(staircase, meet_irreducible_extents(lat)) == {frozenset({"g1"})}


def test_meet_irreducibles_chain_includes_bottom():
    # extents: {} < {g1} < {g1,g2}; the empty extent has a single cover
    ctx = make_context(["X.", ".."])
    lat = all_extents(ctx)
    assert names(ctx, lat.extents) == {frozenset(), frozenset({"g1"}), frozenset({"g1", "g2"})}
    assert names(ctx, meet_irreducible_extents(lat)) == {frozenset(), frozenset({"g1"})}


def test_meet_irreducibles_nominal(nominal2):
    lat = all_extents(nominal2)
    assert names(nominal2, meet_irreducible_extents(lat)) == {frozenset("a"), frozenset("b")}


def test_atomistic(drive, staircase):
    assert is_atomistic(drive)
    assert is_atomistic(make_context(["X."]))
    assert not is_atomistic(staircase)


def test_extent_membership(drive, diag3):
    lat = all_extents(drive)
    one = drive.column_masks[0]
    assert drive.object_names(one) == ("All-Wheel", "Mid-Wheel", "Rear-Wheel", "Front-Wheel")
    assert is_extent(lat, one) and complement_is_extent(lat, one)
    assert is_extent(lat, drive.all_objects)
    assert complement_is_extent(lat, drive.all_objects) == is_extent(lat, 0)
    dlat = all_extents(diag3)
    assert not complement_is_extent(dlat, diag3.object_mask(["g1"]))


def test_clarify():
    dup_col = make_context(["XX.X", ".X.."])
    assert clarify(dup_col).n_attributes == 3
    same_rows = make_context(["X.X", "X.X", "X.X"])
    assert clarify(same_rows).n_objects == 1


def test_clarify_keeps_drive(drive):
    assert clarify(drive) == drive


def test_duplicate_names_rejected():
    with pytest.raises(StructureError):
        FormalContext(("a", "a"), (), ((), ()))
    with pytest.raises(StructureError):
        FormalContext(("a",), ("m",), ((True, False),))


def test_transpose_roundtrip(drive):
    assert drive.transpose().transpose() == drive


@settings(max_examples=150, deadline=None)
@given(contexts(max_objects=8, max_attributes=8))
def test_galois_properties(ctx):
    full = ctx.all_objects
    for a in range(0, full + 1, max(1, (full + 1) // 16)):
        b = a | (full & 0b101)
        assert is_subset(intent(ctx, b), intent(ctx, a))
        assert is_subset(a, closure(ctx, a))
        assert intent(ctx, a) == intent(ctx, extent(ctx, intent(ctx, a)))
        assert closure(ctx, closure(ctx, a)) == closure(ctx, a)


@settings(max_examples=150, deadline=None)
@given(contexts(max_objects=5))
def test_extents_match_brute_force(ctx):
    lat = all_extents(ctx)
    assert len(set(lat.extents)) == len(lat.extents)
    assert names(ctx, lat.extents) == oracles.extents(ctx)
    for col in ctx.column_masks:
        assert col in lat.index


@settings(max_examples=100, deadline=None)
@given(contexts(max_objects=5))
def test_meet_irreducibles_match_brute_force(ctx):
    lat = all_extents(ctx)
    assert names(ctx, meet_irreducible_extents(lat)) == oracles.meet_irreducibles(ctx)


@settings(max_examples=100, deadline=None)
@given(contexts(max_objects=5))
def test_cover_relation_is_transitive_reduction(ctx):
    lat = all_extents(ctx)
    for i, e in enumerate(lat.extents):
        supers = [f for f in lat.extents if f != e and is_subset(e, f)]
        minimal = {f for f in supers if not any(g != f and is_subset(g, f) for g in supers)}
        assert {lat.extents[j] for j in lat.upper_covers[i]} == minimal


@settings(max_examples=100, deadline=None)
@given(contexts(max_objects=6))
def test_clarify_preserves_extents(ctx):
    cl = clarify(ctx)
    kept = set(cl.objects)
    # every removed object duplicates a kept one; compare on kept objects
    orig = {frozenset(g for g in e if g in kept) for e in oracles.extents(ctx)}
    assert orig == oracles.extents(cl)
    assert len(all_extents(cl)) == len(all_extents(ctx))


def test_iter_extents_is_lazy(drive):
    it = iter_extents(drive)
    assert next(it) == 0
