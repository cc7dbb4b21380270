from rest_framework import serializers

from picdescent.zlattice.matrices import IntMatrix
from picdescent.zlattice.models import FgAbelianGroup
from picdescent.zlattice.serializers import FgAbelianGroupSerializer, IntMatrixField

from .models import FiniteGroup, GModule


class FiniteGroupSerializer(serializers.Serializer):
    """
    Serializer for a finite group given by its multiplication table
    """
    order = serializers.IntegerField(min_value=1)
    table = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField(min_value=0)))
    name = serializers.CharField(required=False)

    def validate(self, attrs):
        """
        Validate the table shape against the declared order
        """
        n = attrs['order']
        table = attrs['table']
        if len(table) != n:
            raise serializers.ValidationError({'table': f'Expected {n} rows, got {len(table)}.'})
        for index, row in enumerate(table):
            if len(row) != n:
                raise serializers.ValidationError({'table': f'Row {index} has {len(row)} entries; expected {n}.'})
            if any(x >= n for x in row):
                raise serializers.ValidationError({'table': f'Row {index} names an element outside 0..{n - 1}.'})
        return attrs

    def to_representation(self, instance):
        return {
            'order': instance.order,
            'table': [list(row) for row in instance.table],
            'name': instance.name,
        }

    def create(self, validated_data):
        return FiniteGroup(validated_data['table'], name=validated_data.get('name'))


class GModuleSerializer(serializers.Serializer):
    """
    Serializer for a G-module over the group passed in `context['group']`.

    Action matrices are keyed by element index; only the identity may be
    omitted.
    """
    ambient_rank = serializers.IntegerField(min_value=0)
    relations = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField()),
        required=False,
        default=list,
    )
    action = serializers.DictField(child=IntMatrixField())
    uniquely_divisible = serializers.BooleanField(required=False, default=False)

    def validate(self, attrs):
        """
        Validate matrix shapes and that every non-identity element acts
        """
        group = self.context['group']
        rank = attrs['ambient_rank']
        for index, row in enumerate(attrs['relations']):
            if len(row) != rank:
                raise serializers.ValidationError({
                    'relations': f'Row {index} has {len(row)} entries; expected {rank}.'
                })
        action = {}
        for key, matrix in attrs['action'].items():
            try:
                g = int(key)
            except ValueError:
                raise serializers.ValidationError({'action': f'Key {key!r} is not an element index.'})
            if not 0 <= g < group.order:
                raise serializers.ValidationError({'action': f'Element {g} outside 0..{group.order - 1}.'})
            if matrix.shape != (rank, rank):
                raise serializers.ValidationError({
                    'action': f'Matrix for element {g} must be {rank}x{rank}.'
                })
            action[g] = matrix
        action.setdefault(0, IntMatrix.identity(rank))
        missing = [g for g in group.elements if g not in action]
        if missing:
            raise serializers.ValidationError({'action': f'No matrix for elements {missing}.'})
        attrs['action'] = [action[g] for g in group.elements]
        return attrs

    def create(self, validated_data):
        underlying = FgAbelianGroup(validated_data['ambient_rank'], validated_data['relations'] or None)
        return GModule(
            self.context['group'],
            underlying,
            validated_data['action'],
            uniquely_divisible=validated_data['uniquely_divisible'],
        )


class GModuleSummarySerializer(serializers.Serializer):
    """
    Serializer for module metadata echoed into reports
    """
    name = serializers.CharField(read_only=True)
    group = serializers.CharField(source='group.name', read_only=True)
    ambient_rank = serializers.IntegerField(read_only=True)
    underlying = FgAbelianGroupSerializer(read_only=True)
