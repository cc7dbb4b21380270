from rest_framework import serializers

from .matrices import IntMatrix
from .models import FgAbelianGroup


class IntMatrixField(serializers.Field):
    """
    A matrix written as a list of integer rows.

    `columns` fixes the row length when known from context; empty matrices
    are accepted and take their width from `columns`.
    """
    default_error_messages = {
        'not_rows': 'Expected a list of rows.',
        'ragged': 'Row {index} has {length} entries; expected {expected}.',
        'not_integer': 'Row {index} contains a non-integer entry.',
    }

    def __init__(self, columns=None, **kwargs):
        self.columns = columns
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)):
            self.fail('not_rows')
        rows = []
        width = self.columns
        for index, row in enumerate(data):
            if not isinstance(row, (list, tuple)):
                self.fail('not_rows')
            if any(isinstance(x, bool) or not isinstance(x, int) for x in row):
                self.fail('not_integer', index=index)
            if width is None:
                width = len(row)
            if len(row) != width:
                self.fail('ragged', index=index, length=len(row), expected=width)
            rows.append(tuple(row))
        return IntMatrix.from_rows(rows, width or 0)

    def to_representation(self, value):
        return value.to_lists()


class FgAbelianGroupSerializer(serializers.Serializer):
    """
    Serializer for a finitely generated abelian group, by invariants only
    """
    free_rank = serializers.IntegerField(min_value=0)
    invariant_factors = serializers.ListField(child=serializers.IntegerField(min_value=2))

    def validate_invariant_factors(self, value):
        """
        Check the divisibility chain d1 | d2 | ...
        """
        for smaller, larger in zip(value, value[1:]):
            if larger % smaller:
                raise serializers.ValidationError(f'{smaller} does not divide {larger}.')
        return value

    def to_representation(self, instance):
        return {
            'free_rank': instance.free_rank,
            'invariant_factors': list(instance.invariant_factors),
        }

    def create(self, validated_data):
        return FgAbelianGroup.from_invariants(
            validated_data['invariant_factors'], validated_data['free_rank']
        )


class PresentationSerializer(serializers.Serializer):
    """
    Serializer for a group given by generators and relations
    """
    ambient_rank = serializers.IntegerField(min_value=0)
    relations = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()),
        required=False,
        default=list,
    )

    def validate(self, attrs):
        rank = attrs['ambient_rank']
        for index, row in enumerate(attrs['relations']):
            if len(row) != rank:
                raise serializers.ValidationError({
                    'relations': f'Row {index} has {len(row)} entries; expected {rank}.'
                })
        return attrs

    def create(self, validated_data):
        return FgAbelianGroup(validated_data['ambient_rank'], validated_data['relations'] or None)
