"""
Tests for atoms, faces and orientability
"""

import pytest
from pydantic import ValidationError

from knot_parity.atoms import (
    Atom,
    AtomSurface,
    atom_surface,
    atom_to_dict,
    canonical_atom,
    cycle_orientable,
    enumerate_atoms,
    face_orientable,
    orientability,
    orientable_by_family,
)
from knot_parity.codes import LinkCode, parse_code
from knot_parity.config import get_settings
from knot_parity.cycles import halves
from knot_parity.errors import CapExceededError, NeedsSignedCodeError
from knot_parity.graph import to_framed_graph


class TestOrientability:
    """Test source-sink structures on frames"""

    def test_kink(self, graph_of, kink):
        """Test [1,1] is orientable"""
        result = orientability(graph_of(kink))

        assert result.orientable
        assert len(result.orientation) == 2
        assert result.witness is None

    def test_two_chords(self, graph_of, two_chords):
        """Test [1,2,1,2] is not, with the half at 1 as witness"""
        result = orientability(graph_of(two_chords))

        assert not result.orientable
        assert result.orientation is None
        assert result.witness.origin == "half:1:1"

    @pytest.mark.parametrize("word,expected", [
        ([1, 1], True),
        ([1, 2, 1, 2], False),
        ([1, 2, 3, 1, 2, 3], True),
        ([1, 2, 3, 1, 3, 2], False),
    ])
    def test_matches_family(self, word, expected):
        """Test propagation agrees with the family test"""
        graph = to_framed_graph(LinkCode.free(word))

        assert orientability(graph).orientable is expected
        assert orientable_by_family(graph) is expected

    def test_links(self, graph_of, hopf, unknot):
        """Test the Hopf frame and a free loop are orientable"""
        assert orientability(graph_of(hopf)).orientable
        assert orientability(graph_of(unknot)).orientable

    def test_cycle_orientable(self, graph_of, two_chords):
        """Test a walk with one transversal passage reverses orientation"""
        graph = graph_of(two_chords)
        first, _ = halves(graph, 1)

        assert not cycle_orientable(graph, first)


class TestAtomModel:
    """Test the Atom model"""

    def test_choice_length(self, graph_of, two_chords):
        """Test one bit per vertex is required"""
        with pytest.raises(ValidationError):
            Atom(frame=graph_of(two_chords), black_choice=(0,))

    def test_choice_bits(self, graph_of, kink):
        """Test bits are 0 or 1"""
        with pytest.raises(ValidationError):
            Atom(frame=graph_of(kink), black_choice=(2,))

    def test_corner_partner_is_involution(self, graph_of, three_chords):
        """Test the corner partner pairs halves"""
        atom = Atom(frame=graph_of(three_chords), black_choice=(0, 1, 0))
        for colour in ("black", "white"):
            partner = atom.corner_partner(colour)
            assert all(partner[partner[h]] == h and partner[h] != h for h in range(12))

    def test_surface_validation(self):
        """Test an orientable surface needs a genus"""
        with pytest.raises(ValidationError):
            AtomSurface(black_faces=1, white_faces=1, euler_characteristic=1, orientable=True)


class TestAtomSurface:
    """Test face tracing and Euler characteristic"""

    def test_kink_atoms_are_spheres(self, graph_of, kink):
        """Test both atoms over [1,1] have chi 2"""
        for atom in enumerate_atoms(graph_of(kink)):
            surface = atom_surface(atom)
            assert surface.euler_characteristic == 2
            assert surface.genus == 0
            assert surface.crosscap_number is None

    def test_kink_faces(self, graph_of, kink):
        """Test the face degrees of the first atom"""
        surface = atom_surface(Atom(frame=graph_of(kink), black_choice=(0,)))

        assert (surface.black_faces, surface.white_faces) == (1, 2)
        assert surface.face_degrees == (1, 1, 2)

    def test_two_chords_non_orientable(self, graph_of, two_chords):
        """Test every atom over [1,2,1,2] carries crosscaps"""
        for atom in enumerate_atoms(graph_of(two_chords)):
            surface = atom_surface(atom)
            assert not surface.orientable
            assert surface.genus is None
            assert surface.crosscap_number == 2 - surface.euler_characteristic

    def test_three_chords_orientable(self, graph_of, three_chords):
        """Test every atom over [1,2,3,1,2,3] is orientable"""
        assert all(atom_surface(atom).orientable for atom in enumerate_atoms(graph_of(three_chords)))

    @pytest.mark.parametrize("word", [[1, 1], [1, 2, 1, 2], [1, 2, 3, 1, 2, 3], [1, 2, 3, 1, 3, 2]])
    def test_face_orientation_matches_frame(self, word):
        """Test face two-colouring agrees with the source-sink test"""
        graph = to_framed_graph(LinkCode.free(word))
        expected = orientability(graph).orientable

        assert all(face_orientable(atom) is expected for atom in enumerate_atoms(graph))

    def test_split_link(self):
        """Test a split frame is one sphere per piece"""
        graph = to_framed_graph(parse_code("1 1 ; 2 2"))
        for atom in enumerate_atoms(graph):
            surface = atom_surface(atom)
            assert surface.orientable
            assert surface.piece_characteristics == (2, 2)
            assert surface.euler_characteristic == 4
            assert surface.genus == 0

    def test_free_loop(self):
        """Test a crossing-free circle adds a sphere"""
        graph = to_framed_graph(parse_code("1 1 ; *"))
        surface = atom_surface(Atom(frame=graph, black_choice=(0,)))

        assert surface.piece_characteristics == (2, 2)
        assert surface.genus == 0

    def test_split_non_orientable(self):
        """Test crosscaps come only from the non-orientable piece"""
        graph = to_framed_graph(parse_code("1 2 1 2 ; 3 3"))
        for atom in enumerate_atoms(graph):
            surface = atom_surface(atom)
            first, second = surface.piece_characteristics
            assert second == 2
            assert surface.crosscap_number == 2 - first

    def test_piece_sum_validation(self):
        """Test the genus must add up over pieces"""
        with pytest.raises(ValidationError):
            AtomSurface(
                black_faces=2, white_faces=4, euler_characteristic=4, orientable=True,
                genus=-1, piece_characteristics=(2, 2),
            )

    def test_to_dict(self, graph_of, kink):

        """Test the JSON shape of an orientable atom"""
        data = atom_to_dict(Atom(frame=graph_of(kink), black_choice=(0,)))

        assert data == {
            "black_choice": "0",
            "chi": 2,
            "orientable": True,
            "genus": 0,
            "faces": {"black": 1, "white": 2, "degrees": [1, 1, 2]},
        }


class TestEnumerateAtoms:
    """Test atom enumeration"""

    @pytest.mark.parametrize("word,count", [
        ([1, 1], 2),
        ([1, 2, 1, 2], 4),
        ([1, 2, 3, 1, 2, 3], 8),
    ])
    def test_counts(self, word, count):
        """Test 2^n atoms per frame"""
        assert len(enumerate_atoms(to_framed_graph(LinkCode.free(word)))) == count

    def test_order(self, graph_of, two_chords):
        """Test atoms come in bit-vector order"""
        choices = [atom.black_choice for atom in enumerate_atoms(graph_of(two_chords))]

        assert choices == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_cap(self, graph_of, three_chords):
        """Test the vertex cap"""
        with pytest.raises(CapExceededError):
            enumerate_atoms(graph_of(three_chords), cap=2)

    def test_cap_from_env(self, monkeypatch, graph_of, two_chords):
        """Test the cap is read from the environment"""
        monkeypatch.setenv("KNOT_PARITY_ATOM_CAP", "1")
        get_settings.cache_clear()

        with pytest.raises(CapExceededError):
            enumerate_atoms(graph_of(two_chords))


class TestCanonicalAtom:
    """Test the atom of a signed diagram"""

    def test_positive_kink(self):
        """Test a positive kink takes bit 0"""
        assert canonical_atom(parse_code("O1+ U1+")).black_choice == (0,)

    def test_negative_kink(self):
        """Test a negative kink takes bit 1"""
        assert canonical_atom(parse_code("O1- U1-")).black_choice == (1,)

    def test_virtual_trefoil(self, virtual_trefoil):
        """Test the frame of a signed code is its free frame"""
        atom = canonical_atom(virtual_trefoil)

        free = to_framed_graph(LinkCode.free([1, 2, 1, 2]))

        assert atom.frame.edges == free.edges
        assert atom.frame.half_vertex == free.half_vertex
        assert not atom_surface(atom).orientable

    def test_free_code_refused(self, kink):
        """Test unsigned codes have no canonical atom"""
        with pytest.raises(NeedsSignedCodeError):
            canonical_atom(kink)
