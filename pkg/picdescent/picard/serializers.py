from rest_framework import serializers

from picdescent.gmodules.serializers import GModuleSerializer
from picdescent.zlattice.serializers import FgAbelianGroupSerializer

from .models import AdditiveGroupOfField, FinitePic, PrimaryDivisibleSum, RationalsModZ, UnitModel

PIC_KINDS = ('finite', 'q_mod_z', 'primary_divisible', 'additive_field')


class PicDescriptionSerializer(serializers.Serializer):
    """
    Serializer for a Picard group description.

    `group` is read for kind "finite", `primes` for "primary_divisible",
    `characteristic` and `degree` for "additive_field".
    """
    kind = serializers.ChoiceField(choices=PIC_KINDS)
    group = FgAbelianGroupSerializer(required=False)
    primes = serializers.ListField(child=serializers.IntegerField(min_value=2), required=False)
    characteristic = serializers.IntegerField(min_value=0, required=False, default=0)
    degree = serializers.IntegerField(min_value=1, required=False, default=1)

    def validate(self, attrs):
        """
        Check the fields each kind needs
        """
        if attrs['kind'] == 'finite' and 'group' not in attrs:
            raise serializers.ValidationError({'group': 'A finite description needs a group.'})
        if attrs['kind'] == 'primary_divisible' and 'primes' not in attrs:
            raise serializers.ValidationError({'primes': 'A primary divisible sum needs its primes.'})
        return attrs

    def to_representation(self, instance):
        data = {
            'kind': instance.kind,
            'description': instance.description,
            'finite': instance.is_finite(),
            'exponent': instance.exponent(),
        }
        if isinstance(instance, FinitePic):
            data['group'] = FgAbelianGroupSerializer(instance.group).data
        elif isinstance(instance, PrimaryDivisibleSum):
            data['primes'] = sorted(instance.primes)
        elif isinstance(instance, AdditiveGroupOfField):
            data['characteristic'] = instance.characteristic
            data['degree'] = instance.degree
        return data

    def create(self, validated_data):
        kind = validated_data['kind']
        if kind == 'finite':
            group = FgAbelianGroupSerializer().create(validated_data['group'])
            return FinitePic(group)
        if kind == 'q_mod_z':
            return RationalsModZ()
        if kind == 'primary_divisible':
            return PrimaryDivisibleSum(validated_data['primes'])
        return AdditiveGroupOfField(validated_data['characteristic'], validated_data['degree'])


class UnitModelSerializer(serializers.Serializer):
    """
    Serializer for a unit model over the group passed in `context['group']`
    """
    hilbert90_trivial_parts = serializers.IntegerField(min_value=0, required=False, default=0)
    lattice_part = serializers.DictField(required=False)
    finite_part = serializers.DictField(required=False)
    name = serializers.CharField(required=False)

    def _module(self, data, label):
        serializer = GModuleSerializer(data=data, context=self.context)
        if not serializer.is_valid():
            raise serializers.ValidationError({label: serializer.errors})
        return serializer.save()

    def validate(self, attrs):
        """
        Validate each part as a module over the context group
        """
        for label in ('lattice_part', 'finite_part'):
            if label in attrs:
                attrs[label] = self._module(attrs[label], label)
        return attrs

    def create(self, validated_data):
        return UnitModel(
            self.context['group'],
            hilbert90_trivial_parts=validated_data['hilbert90_trivial_parts'],
            lattice_part=validated_data.get('lattice_part'),
            finite_part=validated_data.get('finite_part'),
            name=validated_data.get('name'),
        )

