from rest_framework import serializers

from .coloring import Coloring
from .core import Isomorphism, SimplicialComplex, make_face
from .flips import CrossFlipMove, FlipMove, make_template
from .pipeline import ReductionReport
from .poset import PosetElement, PseudoCobordism, SimplicialPoset


def _face_list():
    return serializers.ListField(child=serializers.ListField(child=serializers.CharField()))


def _check_faces(value, what='facet'):
    for index, face in enumerate(value, start=1):
        if len(set(face)) != len(face):
            raise serializers.ValidationError(f'{what} {index} repeats a vertex')
    return value


class ColoringSerializer(serializers.Serializer):
    """
    Serializer for vertex colorings: palette size and a color per vertex.
    """
    palette = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    colors = serializers.DictField(child=serializers.IntegerField(min_value=0))

    def validate(self, attrs):
        palette = attrs.get('palette')
        if palette is not None and any(c >= palette for c in attrs['colors'].values()):
            raise serializers.ValidationError(f'colors must lie in 0..{palette - 1}')
        return attrs

    def create(self, validated_data):
        return Coloring(validated_data['colors'], validated_data.get('palette'))

    def to_representation(self, instance):
        return {'palette': instance.palette, 'colors': instance.as_dict()}


class ComplexSerializer(serializers.Serializer):
    """
    Serializer for simplicial complexes given by their facets, optionally colored.
    """
    name = serializers.CharField(required=False, allow_null=True, allow_blank=True)
    facets = _face_list()
    palette = serializers.IntegerField(min_value=1, required=False, allow_null=True)
    colors = serializers.DictField(
        child=serializers.IntegerField(min_value=0), required=False, allow_null=True)

    def validate_facets(self, value):
        return _check_faces(value)

    def validate(self, attrs):
        colors = attrs.get('colors')
        if colors:
            vertices = {v for facet in attrs['facets'] for v in facet}
            missing = sorted(vertices - set(colors))
            if missing:
                raise serializers.ValidationError(f'uncolored vertices: {missing}')
        return attrs

    def create(self, validated_data):
        return SimplicialComplex(validated_data['facets'], name=validated_data.get('name') or None)

    def coloring(self):
        """The coloring carried by the payload, or None."""
        colors = self.validated_data.get('colors')
        if not colors:
            return None
        return Coloring(colors, self.validated_data.get('palette'))

    def to_representation(self, instance):
        record = {'name': instance.name, 'facets': [list(f) for f in instance.facets]}
        coloring = self.context.get('coloring')
        if coloring is not None:
            record['palette'] = coloring.palette
            record['colors'] = coloring.restrict(instance.vertices).as_dict()
        return record


class TemplateSerializer(serializers.Serializer):
    dimension = serializers.IntegerField(min_value=1)
    D = _face_list()
    complement = _face_list()
    provenance = serializers.ChoiceField(choices=['general', 'basic'], default='general')
    shape = serializers.ListField(child=serializers.IntegerField(), required=False)

    def validate(self, attrs):
        _check_faces(attrs['D'])
        _check_faces(attrs['complement'])
        return attrs

    def create(self, validated_data):
        template = make_template(
            SimplicialComplex(validated_data['D']),
            SimplicialComplex(validated_data['complement']),
            validated_data.get('provenance', 'general'))
        if template.d != validated_data['dimension']:
            raise serializers.ValidationError('dimension does not match the facets')
        return template

    def to_representation(self, instance):
        return instance.as_record()


class MoveSerializer(serializers.Serializer):
    """
    Serializer for a single move: a bistellar flip (A, B) or a placed cross-flip template.
    """
    type = serializers.ChoiceField(choices=['bistellar', 'cross'])
    kind = serializers.CharField(required=False)
    A = serializers.ListField(child=serializers.CharField(), required=False)
    B = serializers.ListField(child=serializers.CharField(), required=False)
    template = TemplateSerializer(required=False)
    embedding = serializers.DictField(child=serializers.CharField(), required=False)
    fresh = serializers.DictField(child=serializers.CharField(), required=False)

    def validate(self, attrs):
        if attrs['type'] == 'bistellar':
            if not attrs.get('A') or not attrs.get('B'):
                raise serializers.ValidationError('bistellar moves need nonempty A and B')
            if set(attrs['A']) & set(attrs['B']):
                raise serializers.ValidationError('A and B must be disjoint')
        elif 'template' not in attrs or 'embedding' not in attrs:
            raise serializers.ValidationError('cross-flips need a template and an embedding')
        return attrs

    def create(self, validated_data):
        if validated_data['type'] == 'bistellar':
            return FlipMove(validated_data['A'], validated_data['B'])
        template = TemplateSerializer().create(validated_data['template'])
        return CrossFlipMove(
            template,
            Isomorphism(dict(validated_data['embedding'])),
            Isomorphism(dict(validated_data.get('fresh') or {})),
        )

    def to_representation(self, instance):
        return instance.as_record()


class ElementSerializer(serializers.Serializer):
    id = serializers.CharField()
    rank = serializers.IntegerField(min_value=0, required=False)
    vertices = serializers.ListField(child=serializers.CharField())
    covers = serializers.ListField(child=serializers.CharField(), required=False, default=list)

    def validate(self, attrs):
        if len(set(attrs['vertices'])) != len(attrs['vertices']):
            raise serializers.ValidationError(f'element {attrs["id"]} repeats a vertex')
        if attrs.get('rank') is not None and attrs['rank'] != len(attrs['vertices']):
            raise serializers.ValidationError(f'element {attrs["id"]} has the wrong rank')
        return attrs

    def create(self, validated_data):
        return PosetElement(
            validated_data['id'], make_face(validated_data['vertices']), tuple(validated_data['covers']))

    def to_representation(self, instance):
        return instance.as_record()


class PosetSerializer(serializers.Serializer):
    elements = ElementSerializer(many=True)

    def create(self, validated_data):
        return SimplicialPoset([ElementSerializer().create(e) for e in validated_data['elements']])

    def to_representation(self, instance):
        return {'elements': instance.as_records()}


class CobordismSerializer(serializers.Serializer):
    """
    Serializer for pseudo-cobordisms: the poset, both end markers and an optional shelling witness.
    """
    dimension = serializers.IntegerField(min_value=0)
    elements = ElementSerializer(many=True)
    left = serializers.ListField(child=serializers.CharField())
    right = serializers.ListField(child=serializers.CharField())
    witness = serializers.ListField(child=serializers.CharField(), required=False, allow_null=True)

    def create(self, validated_data):
        poset = SimplicialPoset([ElementSerializer().create(e) for e in validated_data['elements']])
        witness = validated_data.get('witness')
        cobordism = PseudoCobordism(
            poset,
            frozenset(validated_data['left']),
            frozenset(validated_data['right']),
            validated_data['dimension'],
            None if witness is None else tuple(witness),
        )
        return cobordism.verify()

    def to_representation(self, instance):
        return instance.as_record()


class ReportSerializer(serializers.Serializer):
    """
    Serializer for reduction reports: both ends, the moves and a certificate per move.
    """
    mode = serializers.CharField()
    seed = serializers.IntegerField(required=False, allow_null=True)
    success = serializers.BooleanField(default=True)
    start = ComplexSerializer()
    end = ComplexSerializer()
    start_coloring = ColoringSerializer(required=False, allow_null=True)
    end_coloring = ColoringSerializer(required=False, allow_null=True)
    moves = MoveSerializer(many=True)
    intermediates = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    certificates = serializers.ListField(child=serializers.DictField(), required=False, default=list)
    statistics = serializers.DictField(required=False, default=dict)
    relabeling = serializers.DictField(child=serializers.CharField(), required=False, default=dict)

    def validate(self, attrs):
        if attrs['certificates'] and len(attrs['certificates']) != len(attrs['moves']):
            raise serializers.ValidationError('one certificate per move is required')
        return attrs

    def create(self, validated_data):
        def coloring(key):
            data = validated_data.get(key)
            return None if data is None else ColoringSerializer().create(data)

        return ReductionReport(
            mode=validated_data['mode'],
            start=ComplexSerializer().create(validated_data['start']),
            end=ComplexSerializer().create(validated_data['end']),
            moves=[MoveSerializer().create(m) for m in validated_data['moves']],
            intermediates=list(validated_data['intermediates']),
            certificates=[dict(c) for c in validated_data['certificates']],
            seed=validated_data.get('seed'),
            success=validated_data['success'],
            statistics=dict(validated_data['statistics']),
            start_coloring=coloring('start_coloring'),
            end_coloring=coloring('end_coloring'),
            relabeling=dict(validated_data['relabeling']),
        )

    def to_representation(self, instance):
        def coloring(value):
            return None if value is None else ColoringSerializer(value).data

        return {
            'mode': instance.mode,
            'seed': instance.seed,
            'success': instance.success,
            'start': ComplexSerializer(instance.start).data,
            'end': ComplexSerializer(instance.end).data,
            'start_coloring': coloring(instance.start_coloring),
            'end_coloring': coloring(instance.end_coloring),
            'moves': [move.as_record() for move in instance.moves],
            'intermediates': list(instance.intermediates),
            'certificates': list(instance.certificates),
            'statistics': dict(instance.statistics),
            'relabeling': dict(sorted(instance.relabeling.items())),
        }
